#![no_main]

use libfuzzer_sys::fuzz_target;

// The loader must reject arbitrary bytes with an error, never panic or
// allocate unboundedly. On the occasional valid file, exercise the cheap
// derived data as well.
fuzz_target!(|data: &[u8]| {
    let Ok(loaded) = otweights::codefile::load_from_slice(data) else {
        return;
    };
    let code = loaded.code;
    let _ = code.is_degenerate();
    if code.dimension() < code.length() {
        let h = otweights::codes::parity_check(&code).expect("valid code has a check matrix");
        assert!(code.generator().mat_mul(&h.transpose()).is_zero());
    }
});
