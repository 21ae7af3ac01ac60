//! One line per acceptance criterion. Set `ALGFRAME_ACCEPT_N6=1` to also
//! enumerate the posets on six points.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use algframe::corpus::Corpus;
use algframe::fixtures;
use algframe_core::chains::{ChainPredicate, SEPARATING_CHAINS};
use algframe_core::dlat::{enumerate_homs, FinDLat, FramePredicate, HomPredicate, LatticeHom};
use algframe_core::duality::{
    dualize_hom, match_records, priestley_space_of, priestley_space_oracle, round_trip_frame,
    round_trip_space, validate, LatticeDual, Theorem,
};
use algframe_core::order::enumerate_posets;
use algframe_core::priestley::{LSpacePredicate, MapPredicate, SpaceMap};
use algframe_core::Limits;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(d: Duration, budget: Duration) -> Result<(), String> {
    ensure(d < budget, || format!("took {d:.2?}, budget {budget:?}"))
}

fn c1(limits: &Limits) -> Check {
    let start = Instant::now();
    let counts: Vec<usize> = (0..=5)
        .map(|n| enumerate_posets(n, limits).map(|v| v.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let t = start.elapsed();
    ensure(counts == [1, 1, 2, 5, 16, 63], || format!("counts {counts:?}"))?;
    within(t, Duration::from_secs(10))?;
    let mut msg = format!("counts {counts:?} in {t:.2?}");
    if std::env::var_os("ALGFRAME_ACCEPT_N6").is_some() {
        let start = Instant::now();
        let n6 = enumerate_posets(6, limits).map_err(|e| e.to_string())?.len();
        let t6 = start.elapsed();
        ensure(n6 == 318, || format!("n = 6 gives {n6}"))?;
        within(t6, Duration::from_secs(300))?;
        msg += &format!("; n = 6: {n6} in {t6:.2?}");
    } else {
        msg += "; n = 6 skipped";
    }
    Ok(msg)
}

fn c2(lats: &[FinDLat]) -> Check {
    let start = Instant::now();
    let mut pairs = 0;
    for (i, l) in lats.iter().enumerate() {
        let prof = l.oracle_profile();
        for a in l.elements() {
            for b in l.elements() {
                ensure(prof.holds(a, b) == l.leq(a, b), || format!("lattice {i}: ({a}, {b})"))?;
                pairs += 1;
            }
        }
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(30))?;
    Ok(format!("{pairs} pairs in {t:.2?}"))
}

fn c3(lats: &[FinDLat], limits: &Limits) -> Check {
    let mut checked = 0;
    for (i, l) in lats.iter().enumerate().filter(|(_, l)| l.size() <= 16) {
        let oracle = priestley_space_oracle(l, limits).map_err(|e| format!("lattice {i}: {e}"))?;
        let fast = priestley_space_of(l).map_err(|e| e.to_string())?;
        match_records(&oracle, &fast).map_err(|e| format!("lattice {i}: {e}"))?;
        checked += 1;
    }
    Ok(format!("{checked} lattices with |L| <= 16"))
}

fn c4(corpus: &Corpus) -> Check {
    for e in &corpus.entries {
        let l = e.lattice().map_err(|e| e.to_string())?;
        let x = e.space().map_err(|e| e.to_string())?;
        round_trip_frame(&l).map_err(|err| format!("{}: frame {err}", e.id))?;
        round_trip_space(&x).map_err(|err| format!("{}: space {err}", e.id))?;
    }
    Ok(format!("{} of {} entries", corpus.entries.len(), corpus.entries.len()))
}

fn c5(duals: &[LatticeDual], limits: &Limits) -> Check {
    let start = Instant::now();
    let mut runs = 0;
    for (i, d) in duals.iter().enumerate() {
        for t in Theorem::ALL {
            let o = validate(t, d, duals, limits).map_err(|e| format!("lattice {i}: {t}: {e}"))?;
            ensure(o.passed, || format!("lattice {i}: {t} failed, witness {:?}", o.witness))?;
            runs += 1;
        }
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(120))?;
    Ok(format!("{runs} runs on {} lattices in {t:.2?}", duals.len()))
}

fn c6(corpus: &Corpus, duals: &[LatticeDual]) -> Check {
    let (mut stone, mut zero_dim, mut antichains) = (0, 0, 0);
    for (e, d) in corpus.entries.iter().zip(duals) {
        let s = d.lattice().frame_predicate(FramePredicate::Stone).holds;
        let z = d.space().lspace_predicate(LSpacePredicate::ZeroDimL).holds;
        let a = e.poset.covers.is_empty();
        ensure(s == a && z == a, || format!("{}: stone {s}, zeroDimL {z}, antichain {a}", e.id))?;
        stone += s as usize;
        zero_dim += z as usize;
        antichains += a as usize;
    }
    ensure(stone == 6 && zero_dim == 6 && antichains == 6, || {
        format!("stone {stone}, zeroDimL {zero_dim}, antichains {antichains}")
    })?;
    Ok(format!("stone = zeroDimL = antichains = {stone}, entry by entry"))
}

fn c7(duals: &[LatticeDual], limits: &Limits) -> Check {
    let mut upsets = 0;
    for (i, d) in duals.iter().enumerate() {
        let x = d.space();
        let t = &d.table;
        ensure(t.spatial == x.full_mask(), || format!("lattice {i}: spatial part {:b}", t.spatial))?;
        ensure(d.spatial.embedding.len() == x.size(), || format!("lattice {i}: Y"))?;
        ensure(t.upsets.len() == x.points().upset_masks(limits).unwrap().len(), || {
            format!("lattice {i}: not every upset is clopen")
        })?;
        for (k, &u) in t.upsets.iter().enumerate() {
            ensure(t.ker[k] == u && t.core[k] == u, || {
                format!("lattice {i}: ker {:b}, core {:b} on {u:b}", t.ker[k], t.core[k])
            })?;
            upsets += 1;
        }
    }
    let mut maps = 0u64;
    let mut bad = None;
    for (i, a) in duals.iter().enumerate() {
        for (j, b) in duals.iter().enumerate() {
            a.space()
                .for_each_map(b.space(), limits, |f| {
                    maps += 1;
                    if bad.is_none()
                        && !(f.predicate_with(MapPredicate::ProperL, &a.table, &b.table).holds
                            && f.predicate_with(MapPredicate::CoherentL, &a.table, &b.table).holds)
                    {
                        bad = Some((i, j, f.image().to_vec()));
                    }
                })
                .map_err(|e| e.to_string())?;
        }
    }
    if let Some((i, j, img)) = bad {
        return Err(format!("map {i} -> {j} {img:?} is not proper and coherent"));
    }
    Ok(format!("{upsets} upsets, {maps} monotone maps"))
}

fn c8() -> Check {
    let start = Instant::now();
    let rows = fixtures::table().map_err(|e| e.to_string())?;
    let t = start.elapsed();
    ensure(rows.len() == SEPARATING_CHAINS.len(), || "row count".into())?;
    for r in &rows {
        for c in &r.cells {
            ensure(c.agrees(), || {
                format!(
                    "{} {}: closed form {}, oracle {}, expected {}",
                    r.fixture.name, c.predicate, c.closed_form, c.oracle, c.expected
                )
            })?;
        }
    }
    // one chain per strict inclusion
    use ChainPredicate::*;
    let holds = |row: usize, p| rows[row].cells.iter().any(|c| c.predicate == p && c.closed_form);
    ensure(holds(0, Stone) && !holds(1, Stone) && holds(1, Coherent), || "Stone ⊂ coherent".into())?;
    ensure(!holds(2, Coherent) && holds(2, Arithmetic) && holds(2, Algebraic), || {
        "coherent ⊂ arithmetic".into()
    })?;
    ensure(holds(3, StablyCompact) && !holds(3, Algebraic), || "stably compact ⊄ algebraic".into())?;
    ensure(holds(4, StablyContinuous) && !holds(4, StablyCompact), || {
        "stably continuous ⊄ stably compact".into()
    })?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("{} rows x {} predicates in {t:.2?}", rows.len(), ChainPredicate::ALL.len()))
}

fn c9(duals: &[LatticeDual], limits: &Limits) -> Check {
    let small: Vec<&LatticeDual> = duals.iter().filter(|d| d.space().size() <= 3).collect();
    let mut homs_seen = 0;
    for (i, a) in small.iter().enumerate() {
        let (ra, la) = (&a.record, a.lattice());
        let id = dualize_hom(&LatticeHom::identity(la), ra, ra).map_err(|e| e.to_string())?;
        ensure(id.image() == SpaceMap::identity(&ra.space).image(), || format!("identity on {i}"))?;
        for (j, b) in small.iter().enumerate() {
            let gs = enumerate_homs(la, b.lattice(), HomPredicate::FrameHom, limits)
                .map_err(|e| e.to_string())?;
            let mut images = BTreeSet::new();
            for g in &gs {
                let fg = dualize_hom(g, ra, &b.record).map_err(|e| e.to_string())?;
                ensure(fg.predicate(MapPredicate::LMorphism).holds, || format!("{i} -> {j}: not an L-morphism"))?;
                images.insert(fg.image().to_vec());
                homs_seen += 1;
                for (k, c) in small.iter().enumerate() {
                    for h in enumerate_homs(b.lattice(), c.lattice(), HomPredicate::FrameHom, limits)
                        .map_err(|e| e.to_string())?
                    {
                        let fh = dualize_hom(&h, &b.record, &c.record).map_err(|e| e.to_string())?;
                        let hg = h.after(g).map_err(|e| e.to_string())?;
                        let fhg = dualize_hom(&hg, ra, &c.record).map_err(|e| e.to_string())?;
                        let composed = fg.after(&fh).map_err(|e| e.to_string())?;
                        ensure(fhg.image() == composed.image(), || format!("composition {i} -> {j} -> {k}"))?;
                    }
                }
            }
            ensure(images.len() == gs.len(), || format!("{i} -> {j}: duals collide"))?;
        }
    }
    let b2 = FinDLat::boolean(2).unwrap();
    let c2 = FinDLat::chain(2).unwrap();
    let c3 = FinDLat::chain(3).unwrap();
    let count = |a, b| enumerate_homs(a, b, HomPredicate::FrameHom, limits).map(|v| v.len());
    let worked = [count(&c2, &c2), count(&c3, &c2), count(&b2, &c2)]
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    ensure(worked == [1, 2, 2], || format!("worked counts {worked:?}"))?;
    Ok(format!(
        "{homs_seen} homs over {} lattices with |J| <= 3; worked counts {worked:?}",
        small.len()
    ))
}

fn main() -> ExitCode {
    let limits = Limits::default();
    let corpus = Corpus::generate(5, &limits).expect("corpus");
    let lats: Vec<FinDLat> = corpus.entries.iter().map(|e| e.lattice().unwrap()).collect();
    let duals: Vec<LatticeDual> = lats
        .iter()
        .map(|l| LatticeDual::with_limits(l, &limits).unwrap())
        .collect();
    let results: [(&str, Check); 9] = [
        ("poset enumeration counts", c1(&limits)),
        ("way-below oracle equals order", c2(&lats)),
        ("prime-filter oracle matches fast path", c3(&lats, &limits)),
        ("round trips", c4(&corpus)),
        ("theorem suite", c5(&duals, &limits)),
        ("stone / zeroDimL / antichain split", c6(&corpus, &duals)),
        ("finite collapse", c7(&duals, &limits)),
        ("chain witness table", c8()),
        ("morphism duality", c9(&duals, &limits)),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
