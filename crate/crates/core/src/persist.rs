//! Table files and text exports.
//!
//! Table file layout, all integers little-endian:
//!
//! ```text
//! offset  size  field
//!      0     8  magic "XNIMTBL1"
//!      8     1  format version (1)
//!      9     1  family code (0 nim, 1 moore, 2 exact)
//!     10     1  n
//!     11     1  k
//!     12     1  flags (bit 0: remoteness present)
//!     13     4  bound
//!     17     8  position count
//!     25     .  outcome bitmap, ceil(count / 8) bytes; rank r is bit r % 8
//!               of byte r / 8, set for P
//!      .     .  remoteness, count x u16 (only if flagged)
//! ```

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::ClassCountSeries;
use crate::classify::{ExceptionalGraph, PairClass, Quality, Regularity};
use crate::error::{Error, Result};
use crate::position::Position;
use crate::rank::tuple_count;
use crate::rules::{Family, GameRule};
use crate::solver::{Outcome, SolveTable};
use crate::universe::Universe;

pub const MAGIC: &[u8; 8] = b"XNIMTBL1";
pub const FORMAT_VERSION: u8 = 1;
pub const HEADER_LEN: usize = 25;
const FLAG_REMOTENESS: u8 = 1;

/// Exact byte length of a table file.
pub fn table_file_len(count: u64, remoteness: bool) -> u64 {
    HEADER_LEN as u64 + count.div_ceil(8) + if remoteness { 2 * count } else { 0 }
}

pub fn write_table_to<W: Write>(table: &SolveTable, w: &mut W) -> Result<()> {
    let rule = table.rule();
    let count = table.len();
    let mut header = Vec::with_capacity(HEADER_LEN);
    header.extend_from_slice(MAGIC);
    header.push(FORMAT_VERSION);
    header.push(rule.family().code());
    header.push(rule.n() as u8);
    header.push(rule.k() as u8);
    header.push(if table.has_remoteness() { FLAG_REMOTENESS } else { 0 });
    header.extend_from_slice(&table.bound().to_le_bytes());
    header.extend_from_slice(&count.to_le_bytes());
    w.write_all(&header)?;

    let mut bitmap: Vec<u8> = table.outcome_words().iter().flat_map(|w| w.to_le_bytes()).collect();
    bitmap.truncate(count.div_ceil(8) as usize);
    w.write_all(&bitmap)?;

    if let Some(rem) = table.remoteness_slice() {
        let bytes: Vec<u8> = rem.iter().flat_map(|r| r.to_le_bytes()).collect();
        w.write_all(&bytes)?;
    }
    Ok(())
}

pub fn write_table(table: &SolveTable, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_table_to(table, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn table_from_bytes(bytes: &[u8]) -> Result<SolveTable> {
    let corrupt = |m: &str| Error::Corrupt(m.to_string());
    if bytes.len() < HEADER_LEN {
        return Err(corrupt("file shorter than header"));
    }
    if &bytes[..8] != MAGIC {
        return Err(corrupt("bad magic"));
    }
    match bytes[8] {
        0 => return Err(corrupt("version 0")),
        v if v > FORMAT_VERSION => return Err(Error::UnsupportedVersion(v)),
        _ => {}
    }
    let family = Family::from_code(bytes[9]).ok_or_else(|| corrupt("unknown family code"))?;
    let rule = GameRule::new(family, bytes[10] as usize, bytes[11] as usize)
        .map_err(|e| Error::Corrupt(e.to_string()))?;
    let flags = bytes[12];
    if flags & !FLAG_REMOTENESS != 0 {
        return Err(corrupt("unknown flags"));
    }
    let with_rem = flags & FLAG_REMOTENESS != 0;
    let bound = u32::from_le_bytes(bytes[13..17].try_into().unwrap());
    let count = u64::from_le_bytes(bytes[17..25].try_into().unwrap());
    if tuple_count(rule.n(), bound) != Some(count as u128) {
        return Err(corrupt("position count does not match bound"));
    }
    if bytes.len() as u64 != table_file_len(count, with_rem) {
        return Err(corrupt("file length does not match header"));
    }

    let bitmap_len = count.div_ceil(8) as usize;
    let bitmap = &bytes[HEADER_LEN..HEADER_LEN + bitmap_len];
    if count % 8 != 0 && bitmap[bitmap_len - 1] >> (count % 8) != 0 {
        return Err(corrupt("bits set past the last position"));
    }
    let outcomes: Vec<u64> = bitmap
        .chunks(8)
        .map(|c| {
            let mut b = [0u8; 8];
            b[..c.len()].copy_from_slice(c);
            u64::from_le_bytes(b)
        })
        .collect();
    let remoteness = with_rem.then(|| {
        bytes[HEADER_LEN + bitmap_len..]
            .chunks_exact(2)
            .map(|c| u16::from_le_bytes([c[0], c[1]]))
            .collect()
    });
    SolveTable::from_parts(rule, bound, outcomes, remoteness)
}

/// Reads and validates a table file. Nothing is returned on any error.
pub fn read_table(path: &Path) -> Result<SolveTable> {
    let mut bytes = Vec::new();
    File::open(path)?.read_to_end(&mut bytes)?;
    table_from_bytes(&bytes)
}

/// One line of the JSONL export. Field order is fixed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositionRecord {
    pub pos: Vec<u32>,
    pub outcome: Outcome,
    pub moore: Outcome,
    pub class: PairClass,
    pub quality: Quality,
    pub regularity: Option<Regularity>,
    pub remoteness: Option<u16>,
    pub remoteness_reduced: Option<u16>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFilter {
    All,
    Bad,
    Exceptional,
    Deadenders,
    Class(PairClass),
}

impl FromStr for ExportFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "all" => Self::All,
            "bad" => Self::Bad,
            "exceptional" => Self::Exceptional,
            "deadenders" | "deadender" => Self::Deadenders,
            "pp" => Self::Class(PairClass::PP),
            "pn" => Self::Class(PairClass::PN),
            "np" => Self::Class(PairClass::NP),
            "nn" => Self::Class(PairClass::NN),
            _ => return Err(format!("unknown filter {s:?}")),
        })
    }
}

impl ExportFilter {
    fn keep(self, u: &Universe, rank: u64) -> bool {
        let c = u.classes();
        match self {
            Self::All => true,
            Self::Bad => c.quality_at(rank) == Quality::Bad,
            Self::Exceptional => c.is_exceptional_at(rank),
            Self::Deadenders => c.is_deadender_at(rank),
            Self::Class(k) => c.class_at(rank) == k,
        }
    }
}

/// Record order in the JSONL export.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RecordOrder {
    #[default]
    Rank,
    Lexicographic,
}

pub fn record(u: &Universe, rank: u64, x: Position) -> PositionRecord {
    let i = u.info_at(rank, x);
    PositionRecord {
        pos: x.piles().to_vec(),
        outcome: i.outcome,
        moore: i.moore,
        class: i.class,
        quality: i.quality,
        regularity: i.regularity,
        remoteness: i.remoteness,
        remoteness_reduced: i.remoteness_reduced,
    }
}

/// Writes matching positions, one JSON object per line. Returns the count.
pub fn write_jsonl<W: Write>(
    u: &Universe,
    filter: ExportFilter,
    order: RecordOrder,
    w: &mut W,
) -> Result<u64> {
    let mut n = 0u64;
    let mut emit = |w: &mut W, rec: &PositionRecord| -> Result<()> {
        serde_json::to_writer(&mut *w, rec)?;
        w.write_all(b"\n")?;
        n += 1;
        Ok(())
    };
    let selected = u.positions().filter(|(r, _)| filter.keep(u, *r));
    match order {
        RecordOrder::Rank => {
            for (r, x) in selected {
                emit(w, &record(u, r, x))?;
            }
        }
        RecordOrder::Lexicographic => {
            let mut all: Vec<(u64, Position)> = selected.collect();
            all.sort_by(|a, b| a.1.piles().cmp(b.1.piles()));
            for (r, x) in all {
                emit(w, &record(u, r, x))?;
            }
        }
    }
    Ok(n)
}

pub fn export_jsonl(u: &Universe, filter: ExportFilter, order: RecordOrder, path: &Path) -> Result<u64> {
    let mut w = BufWriter::new(File::create(path)?);
    let n = write_jsonl(u, filter, order, &mut w)?;
    w.flush()?;
    Ok(n)
}

pub const CSV_HEADER: &str = "stones,pp,pn,np,nn,ratio_pp_pn,ratio_mixed";

pub fn write_csv_series<W: Write>(series: &ClassCountSeries, w: &mut W) -> Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in &series.rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            r.stones,
            r.pp,
            r.pn,
            r.np,
            r.nn,
            r.ratio_pp_pn(),
            r.ratio_mixed()
        )?;
    }
    Ok(())
}

pub fn export_csv_series(series: &ClassCountSeries, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_csv_series(series, &mut w)?;
    w.flush()?;
    Ok(())
}

fn node_id(x: &Position) -> String {
    x.piles().iter().map(u32::to_string).collect::<Vec<_>>().join("-")
}

pub fn write_dot<W: Write>(g: &ExceptionalGraph, include_isolated: bool, w: &mut W) -> Result<()> {
    writeln!(
        w,
        "// exceptional positions of exact(5,=2) and the moves between them{}",
        if include_isolated { "" } else { ", isolated vertices omitted" }
    )?;
    let nodes: Vec<_> = g
        .nodes
        .iter()
        .filter(|n| include_isolated || !n.is_isolated())
        .collect();
    if nodes.is_empty() {
        writeln!(w, "digraph exceptional {{}}")?;
        return Ok(());
    }
    writeln!(w, "digraph exceptional {{")?;
    for n in nodes {
        writeln!(
            w,
            "  \"{}\" [outcome=\"{}\", class=\"{}\", shape={}];",
            node_id(&n.position),
            n.outcome,
            n.class,
            if n.outcome == Outcome::P { "ellipse" } else { "box" }
        )?;
    }
    for &(a, b) in &g.edges {
        writeln!(
            w,
            "  \"{}\" -> \"{}\";",
            node_id(&g.nodes[a as usize].position),
            node_id(&g.nodes[b as usize].position)
        )?;
    }
    writeln!(w, "}}")?;
    Ok(())
}

pub fn export_dot(g: &ExceptionalGraph, include_isolated: bool, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_dot(g, include_isolated, &mut w)?;
    w.flush()?;
    Ok(())
}
