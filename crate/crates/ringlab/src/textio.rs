//! Text formats for rings, subsets, and homomorphisms.
//!
//! The ring format is line oriented, UTF-8 with LF endings:
//!
//! ```text
//! ring <n>
//! add
//! <n lines of n space-separated indices>
//! mul
//! <n lines of n space-separated indices>
//! ```
//!
//! `#` starts a comment; comments and blank lines are ignored on input and
//! never produced on output, so writing is bit-exact. Subsets are written
//! as `subset <k>: i1 i2 ... ik` with ascending indices and homomorphisms
//! as `hom <n>: f0 f1 ... f(n-1)` in domain order.

use crate::hom::RingHom;
use crate::ring::{FiniteRing, ValidateError};
use crate::subset::Subset;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TextError {
    #[error("format: {0}")]
    Format(String),
    #[error(transparent)]
    Invalid(#[from] ValidateError),
}

/// Serializes a ring in the exact file format.
pub fn write_ring(ring: &FiniteRing) -> String {
    let n = ring.order();
    let mut out = String::new();
    out.push_str(&format!("ring {n}\n"));
    for (name, table) in [("add", ring.add_table()), ("mul", ring.mul_table())] {
        out.push_str(name);
        out.push('\n');
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| table[i * n + j].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Parses and validates a ring file.
pub fn parse_ring(text: &str) -> Result<FiniteRing, TextError> {
    let mut lines = text.lines().filter_map(|raw| {
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        (!stripped.is_empty()).then_some(stripped)
    });

    let header = lines.next().ok_or_else(|| err("missing `ring <n>` header"))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["ring", count] => count
            .parse()
            .map_err(|_| err(&format!("bad order `{count}`")))?,
        _ => return Err(err("first line must be `ring <n>`")),
    };
    if n == 0 {
        return Err(err("order must be positive"));
    }

    let mut read_table = |name: &str| -> Result<Vec<Vec<usize>>, TextError> {
        match lines.next() {
            Some(tag) if tag == name => {}
            other => return Err(err(&format!("expected `{name}` section, got {other:?}"))),
        }
        let mut table = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| err(&format!("{name} table ends at row {i}, expected {n} rows")))?;
            let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| err(&format!("{name} row {i} has a non-integer entry")))?;
            if row.len() != n {
                return Err(err(&format!(
                    "{name} row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            table.push(row);
        }
        Ok(table)
    };

    let add = read_table("add")?;
    let mul = read_table("mul")?;
    if lines.next().is_some() {
        return Err(err("trailing content after the mul table"));
    }
    Ok(FiniteRing::from_tables(&add, &mul)?)
}

/// `subset <k>: i1 i2 ... ik` with ascending indices.
pub fn write_subset(subset: Subset) -> String {
    let members: Vec<String> = subset.iter().map(|i| i.to_string()).collect();
    if members.is_empty() {
        format!("subset {}:", subset.card())
    } else {
        format!("subset {}: {}", subset.card(), members.join(" "))
    }
}

/// Parses a subset line against a given parent order.
pub fn parse_subset(text: &str, ring_order: usize) -> Result<Subset, TextError> {
    let rest = text
        .trim()
        .strip_prefix("subset")
        .ok_or_else(|| err("subset line must start with `subset`"))?;
    let (count_part, members_part) = rest
        .split_once(':')
        .ok_or_else(|| err("subset line must contain `:`"))?;
    let k: usize = count_part
        .trim()
        .parse()
        .map_err(|_| err("bad subset cardinality"))?;
    let indices: Result<Vec<usize>, _> =
        members_part.split_whitespace().map(str::parse).collect();
    let indices = indices.map_err(|_| err("subset has a non-integer index"))?;
    if indices.len() != k {
        return Err(err(&format!(
            "subset declares {k} members but lists {}",
            indices.len()
        )));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(err("subset indices must be strictly ascending"));
    }
    if let Some(&max) = indices.last() {
        if max >= ring_order {
            return Err(err(&format!(
                "subset index {max} out of range 0..{ring_order}"
            )));
        }
    }
    Ok(Subset::from_indices(ring_order, &indices))
}

/// `hom <n>: f0 f1 ... f(n-1)`.
pub fn write_hom(hom: &RingHom) -> String {
    let images: Vec<String> = hom.map().iter().map(|v| v.to_string()).collect();
    format!("hom {}: {}", hom.map().len(), images.join(" "))
}

/// Parses a hom line into its raw image vector; the caller pairs it with
/// domain and codomain rings and runs the homomorphism check.
pub fn parse_hom_map(text: &str) -> Result<Vec<usize>, TextError> {
    let rest = text
        .trim()
        .strip_prefix("hom")
        .ok_or_else(|| err("hom line must start with `hom`"))?;
    let (count_part, images_part) = rest
        .split_once(':')
        .ok_or_else(|| err("hom line must contain `:`"))?;
    let n: usize = count_part
        .trim()
        .parse()
        .map_err(|_| err("bad hom length"))?;
    let images: Result<Vec<usize>, _> = images_part.split_whitespace().map(str::parse).collect();
    let images = images.map_err(|_| err("hom has a non-integer image"))?;
    if images.len() != n {
        return Err(err(&format!(
            "hom declares {n} images but lists {}",
            images.len()
        )));
    }
    Ok(images)
}

fn err(msg: &str) -> TextError {
    TextError::Format(msg.to_string())
}
