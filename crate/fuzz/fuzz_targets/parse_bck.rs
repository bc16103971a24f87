#![no_main]

use bck_core::format::{parse_bck, write_bck};
use bck_core::{validate, FiniteBck};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = parse_bck(text) else {
        return;
    };
    // keep the cubic axiom check cheap
    if file.rows.len() > 24 {
        return;
    }
    let report = validate(&file.rows);
    if let Ok(a) = FiniteBck::new(&file.rows) {
        assert!(report.unwrap().is_valid());
        let again = parse_bck(&write_bck(&a)).unwrap();
        assert_eq!(again.rows, file.rows);
    }
});
