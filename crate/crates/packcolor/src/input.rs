//! graph6 input, one graph per line.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::{Path, PathBuf};

use packcolor_core::graph6::{parse_graph6, HEADER};
use packcolor_core::Graph;

use crate::error::Error;

/// A path, or `-` for standard input.
pub fn open(path: &Path) -> Result<Box<dyn BufRead>, Error> {
    if path == Path::new("-") {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    Ok(Box::new(BufReader::new(file)))
}

/// Non-empty lines of `reader` decoded as graph6, with 1-based line numbers.
/// A bare `>>graph6<<` header line is skipped.
pub struct Graph6Lines<R> {
    reader: R,
    line: usize,
    buf: Vec<u8>,
    name: PathBuf,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R, name: impl Into<PathBuf>) -> Self {
        Graph6Lines { reader, line: 0, buf: Vec::new(), name: name.into() }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<(usize, Graph), Error>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(source) => return Some(Err(Error::Io { path: self.name.clone(), source })),
            }
            self.line += 1;
            while matches!(self.buf.last(), Some(b'\n' | b'\r')) {
                self.buf.pop();
            }
            if self.buf.is_empty() || self.buf == HEADER {
                continue;
            }
            let line = self.line;
            return Some(parse_graph6(&self.buf).map(|g| (line, g)).map_err(|source| Error::Graph6 { line, source }));
        }
    }
}

/// The graph for a single-graph command: `--graph` if given, else the first
/// non-empty line of `stdin`.
pub fn single_graph(flag: Option<&str>, stdin: impl Read) -> Result<Graph, Error> {
    if let Some(text) = flag {
        return parse_graph6(text.trim().as_bytes()).map_err(|source| Error::Graph6 { line: 1, source });
    }
    match Graph6Lines::new(BufReader::new(stdin), "-").next() {
        Some(r) => r.map(|(_, g)| g),
        None => Err(Error::NoGraph),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_and_errors() {
        let text = b">>graph6<<\nA_\n\r\n@\nA\n";
        let out: Vec<_> = Graph6Lines::new(&text[..], "t").collect();
        assert_eq!(out.len(), 3);
        assert_eq!(out[0].as_ref().unwrap().0, 2);
        assert_eq!(out[1].as_ref().unwrap().1.n(), 1);
        assert!(matches!(out[2], Err(Error::Graph6 { line: 5, .. })));
    }

    #[test]
    fn single_graph_sources() {
        assert_eq!(single_graph(Some("A_"), &b""[..]).unwrap().m(), 1);
        assert_eq!(single_graph(None, &b"\nBw\n"[..]).unwrap().m(), 3);
        assert!(matches!(single_graph(None, &b""[..]), Err(Error::NoGraph)));
    }
}
