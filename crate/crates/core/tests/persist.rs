use xnim::analysis::class_counts;
use xnim::classify::exceptional_graph;
use xnim::persist::{
    export_csv_series, export_dot, export_jsonl, read_table, table_file_len, write_table, ExportFilter,
    RecordOrder, CSV_HEADER, HEADER_LEN,
};
use xnim::solver::{solve_full, solve_outcomes, SolveOptions};
use xnim::universe::UniverseOptions;
use xnim::{Error, GameRule, Universe};

#[test]
fn files_round_trip_for_every_family() {
    let dir = tempfile::tempdir().unwrap();
    for rule in [GameRule::nim(3), GameRule::moore(4, 2), GameRule::exact(5, 2)] {
        for with_rem in [false, true] {
            let t = if with_rem {
                solve_full(rule, 9, &SolveOptions::default()).unwrap()
            } else {
                solve_outcomes(rule, 9).unwrap()
            };
            let path = dir.path().join(format!("{}-{with_rem}.xnim", rule.family()));
            write_table(&t, &path).unwrap();
            let len = std::fs::metadata(&path).unwrap().len();
            assert_eq!(len, table_file_len(t.len(), with_rem));
            assert_eq!(read_table(&path).unwrap(), t);
        }
    }
}

#[test]
fn header_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.xnim");
    let t = solve_full(GameRule::moore(4, 2), 7, &SolveOptions::default()).unwrap();
    write_table(&t, &path).unwrap();
    let b = std::fs::read(&path).unwrap();
    assert_eq!(&b[..8], b"XNIMTBL1");
    assert_eq!(&b[8..13], &[1, 1, 4, 2, 1]);
    assert_eq!(u32::from_le_bytes(b[13..17].try_into().unwrap()), 7);
    assert_eq!(u64::from_le_bytes(b[17..25].try_into().unwrap()), 330);
    // remoteness of rank 0 (the empty position) is 0
    let rem_at = HEADER_LEN + 330usize.div_ceil(8);
    assert_eq!(&b[rem_at..rem_at + 2], &[0, 0]);
}

#[test]
fn truncated_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.xnim");
    write_table(&solve_outcomes(GameRule::exact(5, 2), 6).unwrap(), &path).unwrap();
    let b = std::fs::read(&path).unwrap();
    std::fs::write(&path, &b[..b.len() - 2]).unwrap();
    assert!(matches!(read_table(&path), Err(Error::Corrupt(_))));
    assert!(matches!(read_table(&dir.path().join("missing")), Err(Error::Io(_))));
}

#[test]
fn exports_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let u = Universe::build(18, &UniverseOptions::default()).unwrap();

    let jl = dir.path().join("all.jsonl");
    let n = export_jsonl(&u, ExportFilter::All, RecordOrder::Rank, &jl).unwrap();
    assert_eq!(n, u.len());
    let text = std::fs::read_to_string(&jl).unwrap();
    for (line, (r, x)) in text.lines().zip(u.positions()) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pos"], serde_json::json!(x.piles()));
        assert_eq!(v["class"], u.class_at(r).to_string());
    }

    let ex = dir.path().join("ex.jsonl");
    let n = export_jsonl(&u, ExportFilter::Exceptional, RecordOrder::Lexicographic, &ex).unwrap();
    assert_eq!(n, u.classes().count_exceptional());
    let lines: Vec<Vec<u32>> = std::fs::read_to_string(&ex)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_value(serde_json::from_str::<serde_json::Value>(l).unwrap()["pos"].clone()).unwrap())
        .collect();
    assert!(lines.windows(2).all(|w| w[0] < w[1]));

    let csv = dir.path().join("s.csv");
    export_csv_series(&class_counts(&u), &csv).unwrap();
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], CSV_HEADER);
    assert_eq!(rows.len(), 1 + 5 * 18 + 1);
    for row in &rows[1..] {
        let f: Vec<&str> = row.split(',').collect();
        let c: Vec<u64> = f[1..5].iter().map(|s| s.parse().unwrap()).collect();
        let expect = match (c[0], c[1]) {
            (0, 0) => "nan".to_string(),
            (_, 0) => "inf".to_string(),
            (pp, pn) => (pp as f64 / pn as f64).to_string(),
        };
        assert_eq!(f[5], expect);
    }

    let dot = dir.path().join("g.dot");
    export_dot(&exceptional_graph(u.exact(), u.classes()), true, &dot).unwrap();
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.contains("digraph exceptional"));
}
