use msow::eval::{EvalConfig, Mode};

fn main() {
    let t = std::time::Instant::now();
    let mut cfg = EvalConfig::new(4096, 64, 64, Mode::ThreeValued);
    cfg.step_budget = 400_000;
    let out = msow::oracle::differential_suite(42, &cfg, 30);
    println!(
        "formulas={} pairs={} agreements={} unknowns={} mutation={} elapsed={:?}",
        out.formulas, out.pairs, out.decided_agreements, out.unknowns, out.mutation_detected,
        t.elapsed()
    );
    for c in &out.contradictions {
        println!("CONTRADICTION: {c}");
    }
}
