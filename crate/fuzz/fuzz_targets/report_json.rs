#![no_main]
use libfuzzer_sys::fuzz_target;
use socle_lab::report::VerificationReport;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = VerificationReport::from_json(text) {
        let json = report.to_json();
        let again = VerificationReport::from_json(&json).expect("serialized report parses");
        assert_eq!(again.to_json(), json);
        let _ = report.to_text();
    }
});
