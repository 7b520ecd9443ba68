use braidforge_core::braid::parse_word;
use braidforge_core::recognize::*;
use std::time::Instant;
fn main() {
    let big = SearchBudget { max_states: 3_000_000, max_moves_per_certificate: 256 };
    let t0 = Instant::now();
    let w = parse_word("n=4: -2 -1 2 2 3 1 3 2").unwrap();
    let r = recognize_thin_exchange(&w, &big);
    println!("seeded exchange: verdict={:?} states={} time={:?}",
        match &r.verdict { Verdict::Found(_) => "Found", Verdict::NotAdmitted => "NotAdmitted", Verdict::Inconclusive{..} => "Inconclusive" },
        r.states_visited, t0.elapsed());

    let t1 = Instant::now();
    let w2 = parse_word("n=4: 1 2 -3 1 2").unwrap();
    let r2 = recognize_double_destabilization(&w2, &big);
    println!("mixed signs: verdict={:?} states={} time={:?}",
        match &r2.verdict { Verdict::Found(_) => "Found", Verdict::NotAdmitted => "NotAdmitted", Verdict::Inconclusive{..} => "Inconclusive" },
        r2.states_visited, t1.elapsed());
}
