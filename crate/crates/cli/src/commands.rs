//! Subcommand bodies. Each returns text, a JSON value and a verdict.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde_json::{json, Value};

use disthom::algorithms::{
    conjecture_scan, mv_check, reduce_by_orbits_with, Conjecture, ReductionMode, ScanReport,
};
use disthom::closed_form::{
    hom_b1_cf, hom_b1_f, hom_b1_normalized, hom_b1_reduced, hom_lattice, hom_normalized_lattice, hom_point,
    LatticeParams, LatticePart,
};
use disthom::complex::{ComplexPart, ScalarVector};
use disthom::enumeration::{census, enumerate_classes, to_csv, CensusTable, Dedup, Predicate};
use disthom::group::FinAbGroup;
use disthom::homology::homology_profile_with_budget;
use disthom::lattice::lattice_info;
use disthom::magma::OpKind;
use disthom::{Error, MultiMagma};

use crate::args::predicate_name;
use crate::CliError;

/// What a subcommand produced. `ok = false` means a verification mismatch.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Outcome {
    pub fn pass(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

fn groups_json(gs: &[FinAbGroup]) -> Value {
    Value::Array(gs.iter().map(|g| Value::String(g.to_string())).collect())
}

fn kind_name(k: OpKind) -> &'static str {
    match k {
        OpKind::LeftTrivial => "◁",
        OpKind::RightTrivial => "▷",
        OpKind::Essential => "essential",
    }
}

pub fn check(m: &MultiMagma) -> Result<Outcome, CliError> {
    let r = m.report();
    let mut t = String::new();
    writeln!(t, "size {}, {} operations, fingerprint {}", m.size(), m.num_ops(), m.fingerprint()).unwrap();
    for (i, f) in r.ops.iter().enumerate() {
        let mut props = Vec::new();
        for (on, name) in [
            (f.self_distributive, "self-distributive"),
            (f.idempotent, "idempotent"),
            (f.bin_idempotent, "bin-idempotent"),
            (f.associative, "associative"),
            (f.commutative, "commutative"),
            (f.invertible_translations, "invertible translations"),
        ] {
            if on {
                props.push(name);
            }
        }
        writeln!(
            t,
            "op{i} [{}]: {}; right units {:?}; right projectors {:?}",
            kind_name(f.kind),
            if props.is_empty() { "-".to_string() } else { props.join(", ") },
            f.right_units,
            f.right_projectors
        )
        .unwrap();
    }
    writeln!(t, "multishelf: {}", r.is_multishelf).unwrap();
    writeln!(t, "multispindle: {}", r.is_multispindle).unwrap();
    writeln!(t, "absorption: {}", r.satisfies_absorption).unwrap();
    writeln!(t, "unital: {}", r.is_unital).unwrap();
    writeln!(t, "irreducible: {}", r.is_irreducible).unwrap();
    let lattice = lattice_info(m).ok();
    if let Some(info) = &lattice {
        writeln!(
            t,
            "lattice: distributive {}, J = {}, bottom {:?}, top {:?}",
            info.is_distributive, info.j, info.bottom, info.top
        )
        .unwrap();
    }
    let json = json!({ "fingerprint": m.fingerprint(), "report": r, "lattice": lattice });
    Ok(Outcome::pass(t, json))
}

pub fn homology(m: &MultiMagma, s: &ScalarVector, part: ComplexPart, n_max: usize, budget: usize) -> Result<Outcome, CliError> {
    let p = homology_profile_with_budget(m, s, part, n_max, budget)?;
    let mut t = String::new();
    for (n, (g, r)) in p.groups.iter().zip(&p.chain_ranks).enumerate() {
        writeln!(t, "H_{n} = {g}    (rk C_{n} = {r})").unwrap();
    }
    let mut json = serde_json::to_value(&p).map_err(Error::from)?;
    // Same group notation as every other command.
    json["groups"] = groups_json(&p.groups);
    Ok(Outcome::pass(t, json))
}

/// Which closed-form family to evaluate.
pub enum Family {
    Point,
    B1,
    Lattice { size: usize, j: usize },
}

pub fn closed_form(family: Family, s: &ScalarVector, part: &str, augmented: bool, n_max: usize) -> Result<Outcome, CliError> {
    let bad_part = || CliError::Input(format!("--part `{part}` has no closed form for this family"));
    let mut groups = Vec::new();
    for n in 0..=n_max as u32 {
        let g = match &family {
            Family::Point => {
                if s.len() != 1 {
                    return Err(CliError::Input("--point takes one scalar, Σ".into()));
                }
                hom_point(s.as_slice()[0], n, augmented)
            }
            Family::B1 => {
                let [a, b, c, d] = four(s)?;
                match part {
                    "reduced" => hom_b1_reduced(a, b, c, d, n)?,
                    "cf" => hom_b1_cf(a, b, c, d, n)?,
                    "f" => hom_b1_f(a, b, c, d, n)?,
                    "normalized" => hom_b1_normalized(a, b, c, n),
                    _ => return Err(bad_part()),
                }
            }
            Family::Lattice { size, j } => {
                let p = LatticeParams::new(*size, *j, s.clone())?;
                match part {
                    "cf" => hom_lattice(&p, n, LatticePart::Cf)?,
                    "f" => hom_lattice(&p, n, LatticePart::F)?,
                    "reduced" => hom_lattice(&p, n, LatticePart::Reduced)?,
                    "full" => hom_lattice(&p, n, LatticePart::Full)?,
                    "normalized" => hom_normalized_lattice(&p, n)?,
                    _ => return Err(bad_part()),
                }
            }
        };
        groups.push(g);
    }
    let mut t = String::new();
    for (n, g) in groups.iter().enumerate() {
        writeln!(t, "H_{n} = {g}").unwrap();
    }
    Ok(Outcome::pass(t, json!({ "part": part, "scalars": s, "groups": groups_json(&groups) })))
}

fn four(s: &ScalarVector) -> Result<[i64; 4], CliError> {
    match s.as_slice() {
        &[a, b, c, d] => Ok([a, b, c, d]),
        other => Err(CliError::Input(format!("expected four scalars (a,b,c,d), got {}", other.len()))),
    }
}

/// `(|L|, J)` when `m` is `(◁, ∨, ∧, ▷)` over a distributive lattice.
pub fn lattice_shape(m: &MultiMagma) -> Option<(usize, usize)> {
    let r = m.report();
    if m.num_ops() != 4 || r.ops[0].kind != OpKind::LeftTrivial || r.ops[3].kind != OpKind::RightTrivial {
        return None;
    }
    let info = lattice_info(m).ok()?;
    info.is_distributive.then_some((info.size(), info.j))
}

/// Three-way comparison on `CF(X, t)` and `F(X, t)`.
pub fn compare(m: &MultiMagma, s: &ScalarVector, t: usize, n_max: usize, budget: usize) -> Result<Outcome, CliError> {
    let snf_cf = homology_profile_with_budget(m, s, ComplexPart::cf(t), n_max, budget)?.groups;
    let snf_f = homology_profile_with_budget(m, s, ComplexPart::f(t), n_max, budget)?.groups;

    let closed = match lattice_shape(m) {
        Some((size, j)) => {
            let p = LatticeParams::new(size, j, s.clone())?;
            let cf = (0..=n_max as u32).map(|n| hom_lattice(&p, n, LatticePart::Cf)).collect::<Result<Vec<_>, _>>()?;
            let f = (0..=n_max as u32).map(|n| hom_lattice(&p, n, LatticePart::F)).collect::<Result<Vec<_>, _>>()?;
            Some((cf, f))
        }
        None => None,
    };

    // Strict mode checks the hypotheses; outside them the prediction is shown
    // but never counted as a disagreement.
    let (orbit, orbit_in_domain, orbit_note) = match reduce_by_orbits_with(m, s, n_max, ReductionMode::Strict) {
        Ok(r) => (Some(r.homology), true, None),
        Err(Error::Precondition(msg)) | Err(Error::Axiom { witness: msg, .. }) => {
            match reduce_by_orbits_with(m, s, n_max, ReductionMode::Lenient) {
                Ok(r) => (Some(r.homology), false, Some(msg)),
                Err(e) => (None, false, Some(e.to_string())),
            }
        }
        Err(e) => return Err(e.into()),
    };

    let mut t_out = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    writeln!(t_out, "part  n  snf | closed form | orbit reduction").unwrap();
    for (label, snf) in [("CF", &snf_cf), ("F", &snf_f)] {
        for n in 0..=n_max {
            let cl = closed.as_ref().map(|(cf, f)| if label == "CF" { &cf[n] } else { &f[n] });
            let ob = orbit.as_ref().map(|h| if label == "CF" { &h.cf[n] } else { &h.f[n] });
            let cl_ok = cl.is_none_or(|g| g == &snf[n]);
            let ob_ok = ob.is_none_or(|g| g == &snf[n]);
            let agree = cl_ok && (ob_ok || !orbit_in_domain);
            ok &= agree;
            let show = |g: Option<&FinAbGroup>, ok: bool| match g {
                None => "n/a".to_string(),
                Some(g) if ok => g.to_string(),
                Some(g) => format!("{g} (differs)"),
            };
            writeln!(
                t_out,
                "{label:<4} {n}  {} | {} | {}{}",
                snf[n],
                show(cl, cl_ok),
                show(ob, ob_ok),
                if agree { "" } else { "   DISAGREE" }
            )
            .unwrap();
            rows.push(json!({
                "part": label, "degree": n, "snf": snf[n].to_string(),
                "closed_form": cl.map(|g| g.to_string()), "orbit": ob.map(|g| g.to_string()),
                "agree": agree,
            }));
        }
    }
    if closed.is_none() {
        writeln!(t_out, "closed form: not applicable (not (◁, ∨, ∧, ▷) over a distributive lattice)").unwrap();
    }
    if let Some(note) = &orbit_note {
        writeln!(t_out, "orbit reduction outside its hypotheses ({note}); shown as a prediction only").unwrap();
    }
    let json = json!({
        "basepoint": t, "scalars": s, "rows": rows,
        "closed_form_applicable": closed.is_some(),
        "orbit_in_domain": orbit_in_domain, "orbit_note": orbit_note, "agree": ok,
    });
    Ok(Outcome { text: t_out, json, ok })
}

pub fn reduce(m: &MultiMagma, s: &ScalarVector, n_max: usize, mode: ReductionMode) -> Result<Outcome, CliError> {
    let r = reduce_by_orbits_with(m, s, n_max, mode)?;
    let mut t = r.tree.render();
    for n in 0..=n_max {
        writeln!(t, "H_{n}(CF) = {}    H_{n}(F) = {}", r.homology.cf[n], r.homology.f[n]).unwrap();
    }
    Ok(Outcome::pass(t, serde_json::to_value(&r).map_err(Error::from)?))
}

pub fn mv(m: &MultiMagma, x: usize, s: &ScalarVector, n_max: usize) -> Result<Outcome, CliError> {
    let r = mv_check(m, x, s, n_max)?;
    let mut t = String::new();
    writeln!(t, "pivot {}: orbits {:?} and {:?}, intersection {:?}", r.pivot, r.orbits[0], r.orbits[1], r.intersection).unwrap();
    for note in &r.notes {
        writeln!(t, "note: {note}").unwrap();
    }
    for (name, h) in ["O₁∩O₂", "O₁", "O₂", "X"].iter().zip(&r.groups) {
        let hs: Vec<String> = h.iter().map(|g| g.to_string()).collect();
        writeln!(t, "H({name}) = [{}]", hs.join(", ")).unwrap();
    }
    writeln!(t, "rational accounting: {}", r.rational_consistent).unwrap();
    for (p, good) in &r.prime_consistent {
        writeln!(t, "mod {p} accounting: {good}").unwrap();
    }
    if let Some(sp) = r.splitting {
        writeln!(t, "splitting: {sp}").unwrap();
    }
    let ok = r.passed();
    Ok(Outcome { text: t, json: serde_json::to_value(&r).map_err(Error::from)?, ok })
}

pub fn enumerate(size: usize, p: Predicate, dedup: Dedup) -> Result<Outcome, CliError> {
    let classes = enumerate_classes(size, p, dedup)?;
    let mut t = String::new();
    writeln!(t, "{} classes of {} on {size} points", classes.len(), predicate_name(p)).unwrap();
    let mut items = Vec::new();
    for c in &classes {
        let tables: Vec<String> = c.magma.ops().iter().map(|op| format!("{:?}", op.rows())).collect();
        writeln!(t, "{} x{} {}", c.magma.fingerprint(), c.raw_count, tables.join(" ")).unwrap();
        items.push(json!({
            "fingerprint": c.magma.fingerprint(),
            "raw_count": c.raw_count,
            "magma": c.magma.to_file(),
        }));
    }
    Ok(Outcome::pass(t, json!({ "predicate": predicate_name(p), "size": size, "classes": items })))
}

pub fn census_cmd(sizes: RangeInclusive<usize>, table: CensusTable, csv: bool) -> Result<Outcome, CliError> {
    let rows = census(sizes, table)?;
    let text = if csv {
        to_csv(&rows)
    } else {
        let mut t = String::from("row                column        raw     iso (fails)  iso+dual (fails)\n");
        for r in &rows {
            writeln!(t, "{r}").unwrap();
        }
        t
    };
    Ok(Outcome::pass(text, serde_json::to_value(&rows).map_err(Error::from)?))
}

pub fn scan(which: &[Conjecture], sizes: RangeInclusive<usize>, n_max: usize) -> Result<Outcome, CliError> {
    let reports: Vec<ScanReport> = which
        .iter()
        .map(|&c| conjecture_scan(c, sizes.clone(), &c.default_grid(), n_max))
        .collect::<Result<_, _>>()?;
    let text: String = reports.iter().map(ToString::to_string).collect();
    let ok = reports.iter().all(ScanReport::confirmed);
    Ok(Outcome { text, json: serde_json::to_value(&reports).map_err(Error::from)?, ok })
}
