#![no_main]

use bck_core::enumerate::wronski::{Wronski, WronskiElement};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let mut parts = text.splitn(2, ' ');
    let Some(Ok(x)) = parts.next().map(str::parse::<WronskiElement>) else {
        return;
    };
    assert_eq!(x.to_string().parse::<WronskiElement>().unwrap(), x);
    if let Some(Ok(y)) = parts.next().map(str::parse::<WronskiElement>) {
        let _ = Wronski::default().commutator(x, y);
    }
});
