#![no_main]

use bck_core::format::parse_element_set;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&universe, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(set) = parse_element_set(text, universe as usize) {
        assert!(set.iter().all(|x| x < universe as usize));
    }
});
