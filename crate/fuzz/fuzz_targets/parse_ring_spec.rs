#![no_main]
use libfuzzer_sys::fuzz_target;
use socle_lab::script::parse_ring_spec_ast;

// Syntax only: building the presentation would run Buchberger on whatever
// relations the input contains.
fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse_ring_spec_ast(src) {
        let printed = spec.to_string();
        let again = parse_ring_spec_ast(&printed).expect("printed ring spec reparses");
        assert_eq!(again, spec);
    }
});
