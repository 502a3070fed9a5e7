//! Fuzzes the braid-word parser and, for words the parser accepts, runs the
//! bracket engine and checks the parity law on its support.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (u8, &str)| {
    let (strands, text) = input;
    let strands = u64::from(strands % 6);
    let Ok(word) = gluckkit::skein::BraidWord::parse(strands, text) else {
        return;
    };
    assert_eq!(word.strands(), strands);
    assert!(word.letters().iter().all(|&l| l != 0 && l.unsigned_abs() < strands));
    if word.letters().len() <= 10 && strands <= 4 {
        let bracket = gluckkit::skein::bracket_of_closure(&word).expect("valid word evaluates");
        for (i, c) in bracket.terms() {
            assert!(c.is_zero() || (i as u64) % 2 == strands % 2);
        }
    }
});
