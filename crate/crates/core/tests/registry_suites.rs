use mvtool::sequent::registry::{entries, of_theory, Status, Theory};
use mvtool::sequent::{check_sequent, parse_sequent, CheckOptions};
use mvtool::Verdict;

#[test]
fn printer_round_trips_every_registry_sequent() {
    for e in entries() {
        let s = e.sequent();
        let reparsed = parse_sequent(&s.to_string()).unwrap().with_name(e.label);
        assert_eq!(reparsed, s, "{}", e.label);
    }
}

#[test]
fn consequences_hold_in_their_models() {
    for theory in Theory::ALL {
        for model in theory.models().unwrap() {
            for e in of_theory(theory, Status::Provable) {
                let r = check_sequent(&model, &e.sequent(), &CheckOptions::new(8)).unwrap();
                assert_eq!(r.verdict, Verdict::Holds, "{} in {}", e.label, model);
            }
        }
    }
}
