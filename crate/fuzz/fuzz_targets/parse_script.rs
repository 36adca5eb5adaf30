#![no_main]
use libfuzzer_sys::fuzz_target;
use socle_lab::script::parse_script;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(script) = parse_script(src) {
        let printed = script.to_string();
        let again = parse_script(&printed).expect("printed script reparses");
        assert_eq!(again, script);
    }
});
