//! Text format for generator matrices.
//!
//! ```text
//! n k [ring]
//! <row 1>
//! ...
//! <row k>
//! ```
//!
//! Without a ring token the rows are binary strings of length `n`. With
//! `f2u` or `f4u` they are strings of ring symbols. Blank lines and lines
//! starting with `#` are ignored.

use crate::bincode::PackedBinaryCode;
use crate::bits::BitVector;
use crate::constructions::RingGenerator;
use crate::error::{Error, Result};
use crate::rings::{F2u, F4u, Ring, RingId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorFile {
    Binary(PackedBinaryCode),
    F2u(RingGenerator<F2u>),
    F4u(RingGenerator<F4u>),
}

impl GeneratorFile {
    pub fn ring(&self) -> RingId {
        match self {
            GeneratorFile::Binary(_) => RingId::F2,
            GeneratorFile::F2u(_) => RingId::F2U,
            GeneratorFile::F4u(_) => RingId::F4U,
        }
    }

    /// The binary code, Gray-mapping ring generators.
    pub fn to_binary(&self) -> Result<PackedBinaryCode> {
        match self {
            GeneratorFile::Binary(c) => Ok(c.clone()),
            GeneratorFile::F2u(g) => PackedBinaryCode::from_ring_generator(g),
            GeneratorFile::F4u(g) => PackedBinaryCode::from_ring_generator(g),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::BadEncoding("empty generator file".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(Error::BadEncoding(format!("bad header '{header}'")));
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::BadEncoding(format!("bad number '{s}' in header")))
        };
        let (n, k) = (num(fields[0])?, num(fields[1])?);
        let ring = match fields.get(2) {
            Some(r) => r.parse::<RingId>()?,
            None => RingId::F2,
        };
        let rows: Vec<&str> = lines.collect();
        if rows.len() != k {
            return Err(Error::BadEncoding(format!(
                "header says {k} rows, found {}",
                rows.len()
            )));
        }
        match ring {
            RingId::F2 => {
                let rows = rows
                    .iter()
                    .map(|r| r.parse::<BitVector>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(GeneratorFile::Binary(PackedBinaryCode::new(n, rows)?))
            }
            RingId::F2U => Ok(GeneratorFile::F2u(parse_ring_rows(n, &rows)?)),
            RingId::F4U => Ok(GeneratorFile::F4u(parse_ring_rows(n, &rows)?)),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            GeneratorFile::Binary(c) => binary_to_text(c),
            GeneratorFile::F2u(g) => ring_to_text(g),
            GeneratorFile::F4u(g) => ring_to_text(g),
        }
    }
}

fn parse_ring_rows<R: Ring>(n: usize, rows: &[&str]) -> Result<RingGenerator<R>> {
    let rows = rows
        .iter()
        .map(|r| R::parse_vector(r))
        .collect::<Result<Vec<_>>>()?;
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::BadShape(format!(
            "row of length {} in a code of length {n}",
            r.len()
        )));
    }
    RingGenerator::from_rows(rows)
}

pub fn binary_to_text(c: &PackedBinaryCode) -> String {
    let mut s = format!("{} {}\n", c.n(), c.k());
    for r in c.rows() {
        s.push_str(&r.to_string());
        s.push('\n');
    }
    s
}

pub fn ring_to_text<R: Ring>(g: &RingGenerator<R>) -> String {
    let mut s = format!("{} {} {}\n", g.len(), g.k(), R::ID);
    for r in g.rows() {
        s.push_str(&R::format_vector(r));
        s.push('\n');
    }
    s
}
