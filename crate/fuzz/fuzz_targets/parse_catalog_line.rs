#![no_main]

use bck_core::format::CatalogRecord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(record) = CatalogRecord::parse_line(line) {
        let back = CatalogRecord::parse_line(&record.to_line()).unwrap();
        assert_eq!(back, record);
    }
});
