use std::path::PathBuf;

use qcalc::algebra::{dump_presentation, load_presentation};
use qcalc::presentations::AlgebraCatalog;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../presentations")
}

// Set QCALC_BLESS=1 to rewrite the files after a deliberate change.
#[test]
fn shipped_files_match_builders() {
    let cat = AlgebraCatalog::build().unwrap();
    let bless = std::env::var_os("QCALC_BLESS").is_some();
    for p in cat.shipped().unwrap() {
        let path = data_dir().join(format!("{}.json", p.name));
        let text = dump_presentation(&p);
        if bless {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, text, "{} is stale", path.display());
        let loaded = load_presentation(&on_disk).unwrap();
        assert_eq!(dump_presentation(&loaded), on_disk);
        assert_eq!(loaded.rules().len(), p.rules().len());
    }
}
