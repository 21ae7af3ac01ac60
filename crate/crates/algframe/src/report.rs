//! Running the theorem validators over a corpus.

use std::time::Instant;

use algframe_core::duality::{validate, LatticeDual, Outcome, Theorem};
use algframe_core::order::ones;
use algframe_core::{Limits, Witness};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::corpus::Corpus;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportLine {
    pub lattice: String,
    pub validator: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

pub fn witness_json(w: &Witness) -> Value {
    let set = |m: u64| ones(m).collect::<Vec<_>>();
    match w {
        Witness::Element(a) => json!({ "element": a }),
        Witness::Pair(a, b) => json!({ "pair": [a, b] }),
        Witness::Triple(a, b, c) => json!({ "triple": [a, b, c] }),
        Witness::Set(s) => json!({ "set": set(*s) }),
        Witness::SetPair(s, t) => json!({ "sets": [set(*s), set(*t)] }),
        Witness::Map(m) => json!({ "map": m }),
        Witness::MapAt(m, s) => json!({ "map": m, "set": set(*s) }),
    }
}

fn outcome_witness(o: &Outcome) -> Option<Value> {
    if o.passed {
        return None;
    }
    Some(match &o.witness {
        Some(w) => witness_json(w),
        None => json!({
            "sides": o.sides.iter().map(|s| json!({ "label": s.label, "holds": s.holds })).collect::<Vec<_>>()
        }),
    })
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub timings: bool,
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
}

/// Every requested validator on every corpus entry, sorted by lattice id
/// then validator name. Timings are only recorded on request so that the
/// default report is reproducible byte for byte.
pub fn run(
    corpus: &Corpus,
    theorems: &[Theorem],
    limits: &Limits,
    opts: RunOptions,
) -> Result<Vec<ReportLine>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = opts.threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Usage(format!("thread pool: {e}")))?;
    pool.install(|| run_in_pool(corpus, theorems, limits, opts))
}

fn run_in_pool(
    corpus: &Corpus,
    theorems: &[Theorem],
    limits: &Limits,
    opts: RunOptions,
) -> Result<Vec<ReportLine>> {
    let duals: Vec<LatticeDual> = corpus
        .entries
        .par_iter()
        .map(|e| Ok(LatticeDual::with_limits(&e.lattice()?, limits)?))
        .collect::<Result<_>>()?;
    let jobs: Vec<(usize, Theorem)> = (0..duals.len())
        .flat_map(|i| theorems.iter().map(move |&t| (i, t)))
        .collect();
    let mut lines = jobs
        .par_iter()
        .map(|&(i, t)| {
            let start = Instant::now();
            let o = validate(t, &duals[i], &duals, limits)?;
            let micros = start.elapsed().as_micros() as u64;
            Ok(ReportLine {
                lattice: corpus.entries[i].id.clone(),
                validator: t.name().to_owned(),
                status: if o.passed { Status::Pass } else { Status::Fail },
                witness: outcome_witness(&o),
                micros: opts.timings.then_some(micros),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    lines.sort_by(|a, b| (&a.lattice, &a.validator).cmp(&(&b.lattice, &b.validator)));
    Ok(lines)
}

/// One JSON object per line.
pub fn render(lines: &[ReportLine]) -> String {
    let mut out = String::new();
    for l in lines {
        out.push_str(&serde_json::to_string(l).expect("report lines serialize"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_shapes() {
        assert_eq!(witness_json(&Witness::Set(0b101)), json!({ "set": [0, 2] }));
        assert_eq!(witness_json(&Witness::Pair(1, 2)), json!({ "pair": [1, 2] }));
    }

    #[test]
    fn small_corpus_passes_deterministically() {
        let c = Corpus::generate(2, &Limits::default()).unwrap();
        let opts = RunOptions {
            timings: false,
            threads: Some(2),
        };
        let a = run(&c, &Theorem::ALL, &Limits::default(), opts).unwrap();
        assert_eq!(a.len(), 4 * 12);
        assert!(a.iter().all(|l| l.status == Status::Pass));
        let b = run(&c, &Theorem::ALL, &Limits::default(), RunOptions { threads: Some(1), ..opts }).unwrap();
        assert_eq!(render(&a), render(&b));
        assert!(!render(&a).contains("micros"));
    }
}
