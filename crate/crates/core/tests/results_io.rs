use std::fs;

use difsets_core::catalog::{catalog_group, catalog_ids, CatalogId};
use difsets_core::enumerate::{Enumerator, SearchOptions};
use difsets_core::error::Error;
use difsets_core::results::{read_results, results_path, write_results, ResultsFile};

fn enumerate(cid: CatalogId) -> ResultsFile {
    let g = catalog_group(cid).unwrap();
    let e = Enumerator::new(&g, SearchOptions::default()).unwrap();
    ResultsFile::new(cid, &e.run().unwrap())
}

#[test]
fn round_trip_everything_up_to_16() {
    let dir = tempfile::tempdir().unwrap();
    for cid in (1..=16).flat_map(|n| catalog_ids(n).unwrap()) {
        let rf = enumerate(cid);
        let path = results_path(dir.path(), cid);
        write_results(&path, &rf).unwrap();
        let back = read_results(&path).unwrap();
        assert_eq!(back, rf, "{cid}");
        assert_eq!(fs::read_to_string(&path).unwrap(), back.to_text());
    }
}

#[test]
fn known_files() {
    let dir = tempfile::tempdir().unwrap();
    let c7 = enumerate(CatalogId::new(7, 1));
    let path = dir.path().join("c7.txt");
    write_results(&path, &c7).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(
        text,
        "difsets-results 1\ngroup 7 1\nparams v=7 k=3 lambda=1\nset 1 2 4\nend 1\n"
    );

    let c8 = enumerate(CatalogId::new(8, 1));
    assert_eq!(c8.to_text(), "difsets-results 1\ngroup 8 1\nend 0\n");
    assert!(!c8.to_text().contains("set "));

    let g16 = enumerate(CatalogId::new(16, 5));
    assert_eq!(g16.blocks.len(), 1);
    assert_eq!(g16.blocks[0].sets.len(), 2);
    assert_eq!(
        g16.to_text()
            .lines()
            .filter(|l| l.starts_with("set "))
            .count(),
        2
    );
}

#[test]
fn load_errors_are_distinct() {
    let dir = tempfile::tempdir().unwrap();
    let text = enumerate(CatalogId::new(7, 1)).to_text();
    let write = |name: &str, body: String| {
        let p = dir.path().join(name);
        fs::write(&p, body).unwrap();
        p
    };
    let tampered = write("tampered.txt", text.replace("set 1 2 4", "set 1 2 3"));
    assert!(matches!(
        read_results(&tampered),
        Err(Error::Verification { line: 4, .. })
    ));
    let version = write("version.txt", text.replace("results 1", "results 9"));
    assert!(matches!(read_results(&version), Err(Error::Version { .. })));
    let count = write("count.txt", text.replace("end 1", "end 3"));
    assert!(matches!(read_results(&count), Err(Error::Checksum { .. })));
    let garbage = write("garbage.txt", text.replace("set 1 2 4", "set 1 two 4"));
    assert!(matches!(
        read_results(&garbage),
        Err(Error::Parse { line: 4, .. })
    ));
    let range = write("range.txt", text.replace("set 1 2 4", "set 1 2 8"));
    assert!(matches!(
        read_results(&range),
        Err(Error::Parse { line: 4, .. })
    ));
    let unknown = write("unknown.txt", text.replace("group 7 1", "group 7 2"));
    assert!(matches!(
        read_results(&unknown),
        Err(Error::NotFound { .. })
    ));
    assert!(matches!(
        read_results(&dir.path().join("missing.txt")),
        Err(Error::Io { .. })
    ));
}
