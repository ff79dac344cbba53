//! Named verification suites and their dispatch.
//!
//! The universe suites live in [`crate::universe`]; this module adds the
//! seeded set-level colimit suite and the encode-decode suite over random
//! container tables, and maps suite names to runs.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colimits::{check_join_prop, check_pushout_mono, check_pushout_mono_trunc, CheckOutcome, Span};
use crate::container::random_table;
use crate::error::{KernelError, Result};
use crate::fincore::{ElemMap, FinSet};
use crate::report::VerifyReport;
use crate::universe::{
    check_coherence, negative_control, retains_suite, verify_partial_univalence, verify_structural,
    verify_truncated, verify_truncated_forced, CodeBudget, CodeUniverse, PredicateSpec, VSignature,
};
use crate::wtrees::{verify_encode_decode, PredOnIndex};

/// Spans drawn by [`colimit_suite`].
pub const COLIMIT_SPANS: usize = 500;
/// Largest set in a drawn span.
pub const COLIMIT_MAX_SIZE: usize = 6;
/// Tables drawn by [`wtypes_suite`].
pub const WTYPE_TABLES: usize = 20;
pub const WTYPE_MAX_LABELS: usize = 3;
pub const WTYPE_MAX_SHAPES: usize = 4;
pub const WTYPE_MAX_ARITY: usize = 2;
pub const DEFAULT_DEPTH: usize = 2;

/// A span `B <- A -> C` with an injective first leg.
///
/// One span in four draws its sizes from `{0, 1}`, so the propositional
/// instances of the truncation lemma are exercised often.
pub fn random_mono_span<R: Rng>(rng: &mut R, max_size: usize) -> Span {
    let top = if rng.gen_ratio(1, 4) { 1.min(max_size) } else { max_size };
    let b = rng.gen_range(0..=top);
    let a = rng.gen_range(0..=b);
    let c = if a > 0 { rng.gen_range(1..=top.max(1)) } else { rng.gen_range(0..=top) };
    let mut slots: Vec<usize> = (0..b).collect();
    slots.shuffle(rng);
    slots.truncate(a);
    let f = ElemMap::new(FinSet(b), slots).expect("slots lie in B");
    let g = ElemMap::new(FinSet(c), (0..a).map(|_| rng.gen_range(0..c)).collect()).expect("targets lie in C");
    Span::new(f, g).expect("legs share a domain")
}

fn describe(s: &Span) -> String {
    format!("span A={} B={} C={} f={:?} g={:?}", s.a, s.b, s.c, s.f.targets(), s.g.targets())
}

/// Pushouts along monos, joins of propositions, and truncation of pushouts
/// along monos at levels -1 and 0, over seeded random spans.
pub fn colimit_suite(seed: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport::start("appendixA", "n/a", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..COLIMIT_SPANS {
        let s = random_mono_span(&mut rng, COLIMIT_MAX_SIZE);
        let what = describe(&s);

        report.case();
        let d = check_pushout_mono(&s)?;
        if !d.holds() {
            report.fail(format!("pushout-mono {what}"), "mono and pullback", format!("{d:?}"));
        }

        report.case();
        let j = check_join_prop(s.b, s.c);
        if !j.hypothesis {
            report.vacuous += 1;
        } else if !j.holds() {
            report.fail(format!("join-prop {}*{}", j.x, j.y), "prop join", j.join_size);
        }

        // Any map B×C -> A will do; a constant one exists whenever A is inhabited.
        let pairs = FinSet(s.b.size() * s.c.size());
        let h = if s.a.size() > 0 || pairs.size() == 0 {
            Some(ElemMap::new(s.a, vec![0; pairs.size()])?)
        } else {
            None
        };
        report.case();
        let t = check_pushout_mono_trunc(&s, -1, h.as_ref())?;
        match t.outcome {
            CheckOutcome::Pass => {}
            CheckOutcome::Skipped | CheckOutcome::Vacuous => report.vacuous += 1,
            CheckOutcome::Fail => report.fail(format!("trunc(-1) {what}"), "prop pushout", t.pushout_size),
        }

        report.case();
        let t0 = check_pushout_mono_trunc(&s, 0, None)?;
        if t0.outcome == CheckOutcome::Vacuous {
            report.vacuous += 1;
        } else {
            report.fail(format!("trunc(0) {what}"), "VACUOUS", format!("{:?}", t0.outcome));
        }
    }
    Ok(report.finish())
}

/// Encode-decode over seeded random container tables, once with the empty
/// predicate and once with one label propositional.
pub fn wtypes_suite(seed: u64, depth: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::start("wtypes", "none,one-label", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..WTYPE_TABLES {
        let table = random_table(&mut rng, WTYPE_MAX_LABELS, WTYPE_MAX_SHAPES, WTYPE_MAX_ARITY);
        let label = rng.gen_range(0..table.labels().len());
        let preds = [
            PredOnIndex::never(),
            PredOnIndex::new(table.labels()[label].clone(), move |&i: &usize| i == label),
        ];
        for pred in preds {
            let name = pred.name().to_string();
            let r = verify_encode_decode(&table, pred, depth)?;
            report.cases += r.instances;
            for f in r.failures {
                report.fail(
                    format!("table {k} pred={name} {} {} over {}", f.tree0, f.tree1, f.path),
                    format!("{} witness(es)", u8::from(f.oracle)),
                    f.witnesses,
                );
            }
        }
    }
    Ok(report.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Univalence,
    Truncation,
    Structural,
    Retains,
    Colimits,
    Wtypes,
    /// The truncation check under a non-propositional predicate, looking
    /// for pairs with several paths.
    Negative,
    Coherence,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "univalence", "truncation", "structural", "retains", "appendixA", "wtypes", "negative", "coherence", "all",
    ];

    /// What `all` runs, in order.
    pub const ALL: [Suite; 6] = [
        Suite::Univalence,
        Suite::Truncation,
        Suite::Structural,
        Suite::Retains,
        Suite::Colimits,
        Suite::Wtypes,
    ];

    fn needs_codes(self) -> bool {
        !matches!(self, Suite::Retains | Suite::Colimits | Suite::Wtypes)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Univalence => "univalence",
            Suite::Truncation => "truncation",
            Suite::Structural => "structural",
            Suite::Retains => "retains",
            Suite::Colimits => "appendixA",
            Suite::Wtypes => "wtypes",
            Suite::Negative => "negative",
            Suite::Coherence => "coherence",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = KernelError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "univalence" => Suite::Univalence,
            "truncation" => Suite::Truncation,
            "structural" => Suite::Structural,
            "retains" => Suite::Retains,
            "appendixA" => Suite::Colimits,
            "wtypes" => Suite::Wtypes,
            "negative" => Suite::Negative,
            "coherence" => Suite::Coherence,
            "all" => Suite::All,
            _ => {
                return Err(KernelError::parse(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub pred: PredicateSpec,
    pub seed: u64,
    pub depth: usize,
    pub budget: CodeBudget,
    /// Run the truncation check even when the predicate does not imply
    /// propositionality.
    pub force: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            pred: PredicateSpec::IsProp,
            seed: 0,
            depth: DEFAULT_DEPTH,
            budget: CodeBudget::default(),
            force: false,
        }
    }
}

/// Runs one suite, or every suite of `all` in order.
///
/// Preconditions are checked before any work, so a bad predicate is
/// reported as an error rather than as a partial run.
pub fn run_suite(sig: &VSignature, suite: Suite, opts: &SuiteOptions) -> Result<Vec<VerifyReport>> {
    let list: Vec<Suite> = if suite == Suite::All { Suite::ALL.to_vec() } else { vec![suite] };
    let truncation_checked = list.contains(&Suite::Truncation) && !opts.force;
    if truncation_checked && !opts.pred.implies_prop() {
        return Err(KernelError::precondition(format!(
            "predicate {} does not imply propositionality; use --suite negative, or --force",
            opts.pred
        )));
    }
    if list.contains(&Suite::Negative) && opts.pred.implies_prop() {
        return Err(KernelError::precondition(format!(
            "predicate {} implies propositionality, so the negative control cannot find a counterexample",
            opts.pred
        )));
    }
    let cu = if list.iter().any(|s| s.needs_codes()) {
        Some(CodeUniverse::build(sig, opts.budget)?)
    } else {
        None
    };
    let cu = || cu.as_ref().expect("built when needed");
    let mut out = Vec::new();
    for s in list {
        let mut r = match s {
            Suite::Univalence => verify_partial_univalence(cu(), opts.pred)?,
            Suite::Truncation if opts.force => verify_truncated_forced(cu(), opts.pred)?,
            Suite::Truncation => verify_truncated(cu(), opts.pred)?,
            Suite::Structural => verify_structural(cu())?,
            Suite::Negative => negative_control(cu(), opts.pred)?,
            Suite::Coherence => check_coherence(cu(), opts.pred)?,
            Suite::Retains => retains_suite(sig.nullary(), opts.seed)?,
            Suite::Colimits => colimit_suite(opts.seed)?,
            Suite::Wtypes => wtypes_suite(opts.seed, opts.depth)?,
            Suite::All => unreachable!("expanded above"),
        };
        r.seed = opts.seed;
        out.push(r);
    }
    Ok(out)
}
