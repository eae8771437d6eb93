//! Golden invocations shared by the CLI tests and the acceptance suite.
//!
//! Each case runs the CLI on shipped fixtures and compares the canonical
//! report byte for byte with `tests/golden/<name>.json`. Set `BLESS=1` to
//! rewrite the golden files after an intended format change.

#![allow(dead_code)]

use std::path::PathBuf;

use markov_cli::{run, Outcome};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "complete_sp", args: &["complete", "sp.json"], code: 1 },
    Case { name: "complete_model", args: &["complete", "complete_kernel.json"], code: 0 },
    Case { name: "det_copy2", args: &["check", "det", "copy2.json"], code: 0 },
    Case { name: "det_flip", args: &["check", "det", "flip.json"], code: 1 },
    Case { name: "det_gauss", args: &["check", "det", "gauss_affine.json"], code: 0 },
    Case { name: "det_relation", args: &["check", "det", "relation.json"], code: 1 },
    Case { name: "basu_product", args: &["basu", "product_model.json", "s.json", "a.json"], code: 0 },
    Case { name: "basu_vacuous", args: &["basu", "product_model.json", "a.json", "s.json"], code: 2 },
    Case { name: "suff_heads", args: &["suff", "two_coin.json", "heads.json"], code: 0 },
    Case { name: "suff_first_toss", args: &["suff", "two_coin.json", "first_toss.json"], code: 1 },
    Case { name: "ancillary_a", args: &["ancillary", "product_model.json", "a.json"], code: 0 },
    Case { name: "ancillary_s", args: &["ancillary", "product_model.json", "s.json"], code: 1 },
    Case { name: "leq_heads_first", args: &["leq", "two_coin.json", "first_toss.json", "heads.json"], code: 1 },
    Case { name: "leq_first_heads", args: &["leq", "two_coin.json", "heads.json", "first_toss.json"], code: 1 },
    Case { name: "leq_heads_heads", args: &["leq", "two_coin.json", "heads.json", "heads.json"], code: 0 },
    Case { name: "minstat_two_coin", args: &["minstat", "two_coin.json"], code: 0 },
    Case { name: "bahadur_product", args: &["bahadur", "product_model.json", "s.json"], code: 0 },
    Case { name: "bahadur_heads", args: &["bahadur", "two_coin.json", "heads.json"], code: 2 },
    Case { name: "positivity_signed", args: &["check", "positivity", "signed_f.json", "signed_g.json"], code: 1 },
    Case { name: "positivity_vacuous", args: &["check", "positivity", "flip.json", "flip.json"], code: 2 },
    Case { name: "causality_coin", args: &["check", "causality", "flip.json", "flip.json", "flip.json", "flip.json"], code: 0 },
    Case { name: "ci_state_chain", args: &["check", "ci-state", "chain_state.json"], code: 0 },
    Case { name: "ci_state_dependent", args: &["check", "ci-state", "dependent_state.json"], code: 1 },
    Case { name: "ci_gen_chain", args: &["check", "ci-gen", "chain_state.json", "--split", "1,2"], code: 0 },
    Case { name: "ci_proc_dependent", args: &["check", "ci-proc", "dependent_state.json", "--split", "1"], code: 1 },
    Case { name: "ci_markov_chain", args: &["check", "ci-markov", "chain_state.json", "--split", "2"], code: 0 },
    Case { name: "aseq_point", args: &["check", "aseq", "prior_point.json", "flip.json", "flip_variant.json"], code: 0 },
    Case { name: "aseq_prior", args: &["check", "aseq", "prior.json", "flip.json", "flip_variant.json"], code: 1 },
    Case { name: "asdet_flip", args: &["check", "asdet", "prior.json", "flip.json"], code: 1 },
    Case { name: "compose_prior_flip", args: &["compose", "prior.json", "flip.json"], code: 0 },
    Case { name: "tensor_coin_flip", args: &["tensor", "coin.json", "flip.json"], code: 0 },
    Case { name: "compose_gauss", args: &["compose", "gauss_kernel.json", "gauss_affine.json"], code: 0 },
    Case { name: "marginal_chain", args: &["marginal", "chain_state.json", "--keep", "0,2"], code: 0 },
    Case { name: "condition_chain", args: &["condition", "chain_state.json", "--split", "2"], code: 0 },
    Case { name: "condition_gauss", args: &["condition", "gauss_state.json"], code: 0 },
    Case { name: "support_point", args: &["support", "prior_point.json"], code: 0 },
    Case { name: "pushback_flip", args: &["pushback", "flip.json"], code: 0 },
    Case { name: "pushback_gauss", args: &["pushback", "gauss_kernel.json"], code: 0 },
    Case { name: "disintegrate_prior", args: &["disintegrate", "prior.json", "flip.json"], code: 0 },
    Case { name: "bayes_invert_prior", args: &["bayes-invert", "prior.json", "flip.json"], code: 0 },
    Case { name: "laws_finstoch", args: &["--seed", "7", "laws", "finstoch", "--samples", "5", "--max-size", "3"], code: 0 },
    Case { name: "laws_gauss", args: &["laws", "gauss", "--seed", "7", "--samples", "5", "--max-size", "3"], code: 0 },
    Case { name: "laws_chain", args: &["laws", "chain", "--seed", "7", "--samples", "3"], code: 0 },
    Case { name: "laws_needs_seed", args: &["laws", "fuzzy"], code: 3 },
    Case { name: "bad_column", args: &["check", "det", "bad_column.json"], code: 3 },
    Case { name: "mixed_backends", args: &["compose", "coin.json", "relation.json"], code: 2 },
    Case { name: "type_mismatch", args: &["compose", "coin.json", "flip.json"], code: 2 },
    Case { name: "missing_file", args: &["check", "det", "no_such_file.json"], code: 3 },
    Case { name: "unknown_subcommand", args: &["frobnicate"], code: 3 },
];

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

/// Runs the CLI with fixture names resolved against the fixture directory.
pub fn invoke(args: &[&str]) -> Outcome {
    let dir = fixtures();
    let argv = std::iter::once("markov".to_string()).chain(args.iter().map(|a| {
        if a.ends_with(".json") {
            dir.join(a).display().to_string()
        } else {
            a.to_string()
        }
    }));
    run(argv)
}

/// Replaces the fixture directory in a report so goldens are portable.
pub fn portable(document: &str) -> String {
    document.replace(&fixtures().display().to_string(), "<fixtures>")
}

/// Compares one case with its golden file; returns a description of any
/// mismatch.
pub fn check_case(case: &Case) -> Result<(), String> {
    let outcome = invoke(case.args);
    if outcome.code != case.code {
        return Err(format!("{}: exit {} (expected {}): {}", case.name, outcome.code, case.code, outcome.document));
    }
    let actual = portable(&outcome.document);
    let path = golden_path(case.name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, &actual).map_err(|e| e.to_string())?;
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if actual != expected {
        return Err(format!("{}: report differs from golden\n  got:      {actual}  expected: {expected}", case.name));
    }
    Ok(())
}
