//! The graph6 text encoding.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, `126` followed by three 6-bit
//! groups for `n <= 258047`, or `126 126` followed by six groups. The upper
//! triangle `x(0,1), x(0,2), x(1,2), x(0,3), ...` follows, packed six bits
//! per byte (most significant first), zero padded, each byte offset by 63.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

pub const HEADER: &[u8] = b">>graph6<<";

const MAX_ORDER: u64 = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// A byte outside the printable range 63..=126.
    NonPrintable(u8),
    /// The length prefix is cut short or uses a longer form than needed.
    MalformedLength,
    /// Fewer edge bytes than the order requires.
    Truncated,
    TrailingBytes,
    /// Padding bits after the last edge bit are not zero.
    NonZeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            Graph6ErrorKind::Empty => "empty input",
            Graph6ErrorKind::NonPrintable(_) => "byte outside 63..=126",
            Graph6ErrorKind::MalformedLength => "malformed length prefix",
            Graph6ErrorKind::Truncated => "truncated edge data",
            Graph6ErrorKind::TrailingBytes => "trailing bytes after edge data",
            Graph6ErrorKind::NonZeroPadding => "nonzero padding bits",
        };
        write!(f, "graph6: {what} at byte {}", self.offset)
    }
}

impl core::error::Error for Graph6Error {}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u8, Graph6Error> {
    match bytes.get(at) {
        None => Err(err(at, Graph6ErrorKind::MalformedLength)),
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(err(at, Graph6ErrorKind::NonPrintable(b))),
    }
}

fn read_order(bytes: &[u8], base: usize) -> Result<(u64, usize), Graph6Error> {
    let first = *bytes.get(base).ok_or(err(base, Graph6ErrorKind::Empty))?;
    if !(63..=126).contains(&first) {
        return Err(err(base, Graph6ErrorKind::NonPrintable(first)));
    }
    if first < 126 {
        return Ok(((first - 63) as u64, 1));
    }
    let (groups, skip) = if bytes.get(base + 1) == Some(&126) { (6, 2) } else { (3, 1) };
    let mut n = 0u64;
    for i in 0..groups {
        n = (n << 6) | sextet(bytes, base + skip + i)? as u64;
    }
    let minimal = if groups == 3 { n > 62 } else { n > 258_047 };
    if !minimal || n > MAX_ORDER {
        return Err(err(base, Graph6ErrorKind::MalformedLength));
    }
    Ok((n, skip + groups))
}

/// Parses one graph6 string (no line terminator). A leading `>>graph6<<`
/// header is accepted. Error offsets count from the start of `text`.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let base = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let (n64, prefix) = read_order(text, base)?;
    let start = base + prefix;
    let bits = n64 * n64.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let available = (text.len() - start) as u64;
    if available < need {
        let first_bad = text[start..]
            .iter()
            .position(|b| !(63..=126).contains(b))
            .map(|p| start + p);
        return Err(match first_bad {
            Some(at) => err(at, Graph6ErrorKind::NonPrintable(text[at])),
            None => err(text.len(), Graph6ErrorKind::Truncated),
        });
    }
    let need = need as usize;
    let n = n64 as usize;
    let data = &text[start..start + need];
    if let Some(p) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(start + p, Graph6ErrorKind::NonPrintable(data[p])));
    }
    if text.len() > start + need {
        return Err(err(start + need, Graph6ErrorKind::TrailingBytes));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = data[need - 1] - 63;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(err(start + need - 1, Graph6ErrorKind::NonZeroPadding));
        }
    }
    Ok(Graph::from_edges(n, edges).expect("upper-triangle bits give a simple graph"))
}

/// Canonical graph6 encoding without header or line terminator.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    let n64 = n as u64;
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n64 >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n64 >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
