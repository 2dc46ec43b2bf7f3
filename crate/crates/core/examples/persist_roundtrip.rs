//! Writes a table file, reads it back and exports a few JSONL records.

use xnim::persist::{read_table, table_file_len, write_jsonl, write_table, ExportFilter, RecordOrder};
use xnim::solver::{solve_full, SolveOptions};
use xnim::universe::UniverseOptions;
use xnim::{GameRule, Universe};

fn main() -> xnim::Result<()> {
    let table = solve_full(GameRule::exact(5, 2), 20, &SolveOptions::default())?;
    let path = std::env::temp_dir().join("xnim-example-exact-20.xnim");
    write_table(&table, &path)?;

    let bytes = std::fs::metadata(&path)?.len();
    assert_eq!(bytes, table_file_len(table.len(), true));
    let back = read_table(&path)?;
    assert_eq!(back, table);
    println!("{}: {bytes} bytes, round trip ok", path.display());
    std::fs::remove_file(&path)?;

    let u = Universe::build(20, &UniverseOptions::default())?;
    let mut out = Vec::new();
    let n = write_jsonl(&u, ExportFilter::Bad, RecordOrder::Lexicographic, &mut out)?;
    println!("{n} bad positions at bound 20, first three:");
    for line in String::from_utf8_lossy(&out).lines().take(3) {
        println!("{line}");
    }
    Ok(())
}
