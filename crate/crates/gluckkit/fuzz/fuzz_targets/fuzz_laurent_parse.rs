//! Fuzzes the Laurent-polynomial text parser: anything it accepts must
//! survive a display/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

use gluckkit::laurent::LaurentPolynomial;

fuzz_target!(|text: &str| {
    let Ok(p) = text.parse::<LaurentPolynomial>() else {
        return;
    };
    let shown = p.to_string();
    let reparsed: LaurentPolynomial = shown.parse().expect("printed form parses");
    assert_eq!(p, reparsed);
});
