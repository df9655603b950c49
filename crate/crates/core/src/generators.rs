//! Named graph families.

use alloc::vec::Vec;

use rand::Rng;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Petersen,
    /// `C_n` box `K_2`.
    Prism(usize),
}

pub fn generate(kind: Family) -> Result<Graph, GraphError> {
    let graph = match kind {
        Family::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::BadParameter("cycle needs n >= 3"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Path(n) => {
            if n < 1 {
                return Err(GraphError::BadParameter("path needs n >= 1"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Complete(n) => {
            if !(1..=4).contains(&n) {
                return Err(GraphError::BadParameter("complete graph needs 1 <= n <= 4"));
            }
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        Family::Petersen => {
            // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
            let pairs: Vec<(usize, usize)> =
                (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
            let mut edges = Vec::new();
            for (i, &(a, b)) in pairs.iter().enumerate() {
                for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                    if a != c && a != d && b != c && b != d {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(10, edges)
        }
        Family::Prism(n) => {
            if n < 3 {
                return Err(GraphError::BadParameter("prism needs n >= 3"));
            }
            let mut edges = Vec::with_capacity(3 * n);
            for i in 0..n {
                edges.push((i, (i + 1) % n));
                edges.push((n + i, n + (i + 1) % n));
                edges.push((i, n + i));
            }
            Graph::from_edges(2 * n, edges)
        }
    };
    Ok(graph.expect("named families are simple"))
}

/// A random subcubic graph on `n` vertices: `attempts` uniformly drawn
/// vertex pairs, each kept when it is new and both ends still have degree
/// below three. Not necessarily connected.
pub fn random_subcubic<R: Rng + ?Sized>(rng: &mut R, n: usize, attempts: usize) -> Graph {
    let mut degree = alloc::vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n >= 2 {
        for _ in 0..attempts {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let (a, b) = (u.min(v), u.max(v));
            if a != b && degree[a] < 3 && degree[b] < 3 && !edges.contains(&(a, b)) {
                degree[a] += 1;
                degree[b] += 1;
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct and in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regular(g: &Graph, d: usize) -> bool {
        g.vertices().all(|v| g.degree(v) == d)
    }

    #[test]
    fn family_sizes() {
        let p = generate(Family::Petersen).unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(regular(&p, 3));
        let c5 = generate(Family::Cycle(5)).unwrap();
        assert_eq!((c5.n(), c5.m()), (5, 5));
        assert!(regular(&c5, 2));
        let pr = generate(Family::Prism(4)).unwrap();
        assert_eq!((pr.n(), pr.m()), (8, 12));
        assert!(regular(&pr, 3));
        let k4 = generate(Family::Complete(4)).unwrap();
        assert_eq!(k4.m(), 6);
        assert_eq!(generate(Family::Path(1)).unwrap().n(), 1);
    }

    #[test]
    fn random_graphs_are_subcubic_and_seeded() {
        use rand::SeedableRng;
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [0, 1, 5, 16] {
            let g = random_subcubic(&mut a, n, 3 * n);
            assert!(g.is_subcubic());
            g.validate().unwrap();
            assert_eq!(g, random_subcubic(&mut b, n, 3 * n));
        }
    }

    #[test]
    fn out_of_range() {
        assert!(generate(Family::Cycle(2)).is_err());
        assert!(generate(Family::Prism(2)).is_err());
        assert!(generate(Family::Path(0)).is_err());
        assert!(generate(Family::Complete(5)).is_err());
        assert!(generate(Family::Complete(0)).is_err());
    }

    #[test]
    fn generated_graphs_validate() {
        for kind in [
            Family::Cycle(3),
            Family::Path(6),
            Family::Complete(3),
            Family::Petersen,
            Family::Prism(5),
        ] {
            generate(kind).unwrap().validate().unwrap();
        }
    }
}
