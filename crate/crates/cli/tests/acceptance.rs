mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use geonerve::cohom::{h2, representation_check, FiniteGroup, GroupFamily};
use geonerve::laxfun::{
    compose_lax_functors, enumerate_lax_functors, enumerate_lax_transformations, ComponentPolicy, LaxFunctor,
};
use geonerve::nerve::{
    nerve_of_lax_functor, nerve_of_transformation, nerve_of_two_category, reconstruct_lax_functor,
    transformation_from_homotopy, Nerve,
};
use geonerve::search::Budget;
use geonerve::simpl::{classic_nerve, enumerate_simplicial_maps, find_homotopy, spine_map, TruncSSet};
use geonerve::twocat::{delta_two_category, from_category, Category, TwoCat};

use common::*;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn simplicial_identities() -> Outcome {
    let corpus = two_categories();
    ensure(corpus.len() >= 10, || format!("corpus has only {} 2-categories", corpus.len()))?;
    for (name, c) in &corpus {
        let n = nerve_of_two_category(c);
        TruncSSet::validate(&n.to_file()).map_err(|e| format!("{name}: {e}"))?;
        ensure(n.is_coskeletal(), || format!("{name}: nerve is not coskeletal"))?;
    }
    Ok(())
}

fn classic_agreement() -> Outcome {
    for (name, c) in categories() {
        let ours = nerve_of_two_category(&Arc::new(from_category(&c)));
        let theirs = Arc::new(classic_nerve(&c));
        TruncSSet::validate(&theirs.to_file()).map_err(|e| format!("{name}: classic nerve: {e}"))?;
        let rename = |n: usize| -> Option<Vec<usize>> {
            (0..ours.size(n)).map(|x| theirs.find(n, ours.name(n, x))).collect()
        };
        let (phi0, phi1) = (rename(0), rename(1));
        let iso = phi0
            .zip(phi1)
            .and_then(|(p0, p1)| spine_map(ours.clone(), theirs.clone(), p0, p1))
            .is_some_and(|m| m.is_bijective());
        ensure(iso, || format!("{name}: nerve and classic nerve are not isomorphic"))?;
    }
    let sizes = |c: &Category| nerve_of_two_category(&Arc::new(from_category(c))).sizes();
    ensure(sizes(&Category::ordinal(2)) == [3, 6, 10, 15], || "level sizes of [2]".into())?;
    ensure(sizes(&Category::cyclic_group(2)) == [1, 2, 4, 8], || "level sizes of BZ/2".into())
}

fn simplex_duality() -> Outcome {
    for (name, c) in two_categories() {
        let nerve = nerve_of_two_category(&c);
        for n in 0..=3 {
            let count = enumerate_lax_functors(&Arc::new(delta_two_category(n)), &c, None, &mut Budget::default())
                .map_err(|e| e.to_string())?
                .len();
            ensure(count == nerve.size(n), || {
                format!("{name}, n = {n}: {} simplices, {count} lax functors", nerve.size(n))
            })?;
        }
    }
    Ok(())
}

fn full_and_faithful() -> Outcome {
    let c = Arc::new(from_category(&Category::cyclic_group(2)));
    let d = aut(FiniteGroup::cyclic(3));
    let (nc, nd) = (Nerve::new(c.clone()), Nerve::new(d.clone()));
    let mut budget = Budget::default();
    let err = |e: geonerve::Error| e.to_string();
    let maps = enumerate_simplicial_maps(nc.sset(), nd.sset(), &mut budget).map_err(err)?;
    ensure(maps.len() == 4, || format!("{} simplicial maps", maps.len()))?;
    let functors = enumerate_lax_functors(&c, &d, None, &mut budget).map_err(err)?;
    ensure(functors.len() == 4, || format!("{} lax functors", functors.len()))?;
    for f in &functors {
        let back = reconstruct_lax_functor(&nerve_of_lax_functor(f, &nc, &nd).map_err(err)?, &nc, &nd).map_err(err)?;
        ensure(&back == f, || "reconstruct after nerve is not the identity".into())?;
    }
    for m in &maps {
        let back = nerve_of_lax_functor(&reconstruct_lax_functor(m, &nc, &nd).map_err(err)?, &nc, &nd).map_err(err)?;
        ensure(&back == m, || "nerve after reconstruct is not the identity".into())?;
    }
    Ok(())
}

fn functoriality() -> Outcome {
    let z2 = Arc::new(from_category(&Category::cyclic_group(2)));
    let z3 = Arc::new(from_category(&Category::cyclic_group(3)));
    let d = |n| Arc::new(delta_two_category(n));
    let (a2, a3) = (aut(FiniteGroup::cyclic(2)), aut(FiniteGroup::cyclic(3)));
    let chains: Vec<[Arc<TwoCat>; 3]> = vec![
        [d(1), d(2), z2.clone()],
        [d(2), d(1), a3.clone()],
        [z2.clone(), z2.clone(), a2.clone()],
        [z2.clone(), a3.clone(), a3.clone()],
        [d(2), a2.clone(), a3.clone()],
        [z3.clone(), a2.clone(), a2.clone()],
    ];
    let err = |e: geonerve::Error| e.to_string();
    let mut pairs = 0;
    for [a, b, c] in &chains {
        let (na, nb, nc) = (Nerve::new(a.clone()), Nerve::new(b.clone()), Nerve::new(c.clone()));
        let mut budget = Budget::default();
        let fs = enumerate_lax_functors(a, b, None, &mut budget).map_err(err)?;
        let gs = enumerate_lax_functors(b, c, None, &mut budget).map_err(err)?;
        for f in &fs {
            let nf = nerve_of_lax_functor(f, &na, &nb).map_err(err)?;
            for g in &gs {
                let gf: LaxFunctor = compose_lax_functors(g, f).map_err(err)?;
                let lhs = nerve_of_lax_functor(&gf, &na, &nc).map_err(err)?;
                let rhs = nf.then(&nerve_of_lax_functor(g, &nb, &nc).map_err(err)?).map_err(err)?;
                ensure(lhs == rhs, || "nerve of a composite differs from the composite of nerves".into())?;
                pairs += 1;
            }
        }
    }
    ensure(pairs > 0, || "no composable pairs".into())
}

fn homotopy_transformation() -> Outcome {
    let err = |e: geonerve::Error| e.to_string();
    let domains = [
        Arc::new(from_category(&Category::cyclic_group(2))),
        Arc::new(delta_two_category(1)),
        Arc::new(delta_two_category(2)),
    ];
    for k in [3, 2] {
        let d = aut(FiniteGroup::cyclic(k));
        let nd = Nerve::new(d.clone());
        for c in &domains {
            let nc = Nerve::new(c.clone());
            let mut budget = Budget::default();
            let fs = enumerate_lax_functors(c, &d, None, &mut budget).map_err(err)?;
            let maps = fs.iter().map(|f| nerve_of_lax_functor(f, &nc, &nd)).collect::<Result<Vec<_>, _>>().map_err(err)?;
            for (i, f) in fs.iter().enumerate() {
                for (j, g) in fs.iter().enumerate() {
                    // α : F ⇒ G corresponds to a homotopy ner G ⇒ ner F
                    let ts = enumerate_lax_transformations(f, g, ComponentPolicy::Any, &mut budget).map_err(err)?;
                    let h = find_homotopy(&maps[j], &maps[i], &mut budget).map_err(err)?;
                    ensure(h.is_some() == !ts.is_empty(), || {
                        format!("Aut(Z/{k}): homotopy and transformation existence disagree for functors {i}, {j}")
                    })?;
                    for t in &ts {
                        let h = nerve_of_transformation(t, &nc, &nd).map_err(err)?;
                        ensure(h.p() == &maps[j] && h.q() == &maps[i], || "homotopy has the wrong ends".into())?;
                        let back = transformation_from_homotopy(&h, g, f, &nc, &nd).map_err(err)?;
                        ensure(&back == t, || "transformation does not survive the round trip".into())?;
                    }
                    if let Some(h) = h {
                        let t = transformation_from_homotopy(&h, g, f, &nc, &nd).map_err(err)?;
                        let again = nerve_of_transformation(&t, &nc, &nd).map_err(err)?;
                        ensure(again.p() == h.p() && again.q() == h.q(), || "homotopy ends change in the round trip".into())?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn representation() -> Outcome {
    let err = |e: geonerve::Error| e.to_string();
    let z2 = Category::cyclic_group(2);
    // (coefficients, extension groups of Z/2 by them)
    let cases = [
        (FiniteGroup::cyclic(3), cyclic_table(3), vec![cyclic_table(6), s3_table()]),
        (FiniteGroup::cyclic(2), cyclic_table(2), vec![cyclic_table(4), klein_table()]),
    ];
    for (k, table, known) in cases {
        let r = representation_check(&z2, &GroupFamily::single(k.clone()), &mut Budget::default()).map_err(err)?;
        ensure(r.passed() && r.h2_classes == 2 && r.homotopy_classes == 2, || r.summary())?;
        let mut expected: Vec<Vec<usize>> = known.iter().map(order_profile).collect();
        expected.sort();
        let found = z2_extension_profiles(&table);
        ensure(found == expected, || format!("extensions by Z/{}: {found:?}", k.order()))?;
        ensure(found.len() == r.h2_classes, || "class count differs from the extension count".into())?;
        for policy in [ComponentPolicy::Any, ComponentPolicy::Identity] {
            let h = h2(&z2, &GroupFamily::single(k.clone()), policy, &mut Budget::default()).map_err(err)?;
            ensure(h.num_classes() == 2, || format!("{policy:?}: {} classes", h.num_classes()))?;
        }
    }
    for k in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)] {
        let r = representation_check(&Category::terminal(), &GroupFamily::single(k), &mut Budget::default())
            .map_err(err)?;
        ensure(r.passed() && r.h2_classes == 1 && r.homotopy_classes == 1, || r.summary())?;
    }
    let out = geonerve(&["rep-check", "--groupoid", "z2.cat.json", "--family", "z3.fam.json"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(
        out.status.success() && stdout.lines().next() == Some("classes: 2, homotopy classes: 2, bijection: PASS"),
        || format!("cli rep-check printed {stdout:?}"),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let mut runs: Vec<Vec<String>> = Vec::new();
    let mut files: Vec<String> = std::fs::read_dir(data_dir())
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok()?.file_name().into_string().ok())
        .collect();
    files.sort();
    for f in &files {
        runs.push(vec!["validate".into(), f.clone()]);
        if f.ends_with(".2cat.json") {
            runs.push(vec!["nerve".into(), f.clone(), "-o".into(), out(&format!("{f}.sset.json"))]);
        }
    }
    let owned = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    runs.push(owned(&["nerve-map", "z2-twisted.laxfun.json"]));
    runs.push(owned(&["reconstruct", "z2-twisted.smap.json", "--dom", "z2.2cat.json", "--cod", "aut-z3.2cat.json"]));
    runs.push(owned(&["reconstruct", "broken.smap.json", "--dom", "z2.2cat.json", "--cod", "aut-z3.2cat.json"]));
    runs.push(owned(&["enum-lax", "z2.2cat.json", "aut-z3.2cat.json"]));
    runs.push(owned(&["enum-lax", "delta2.2cat.json", "delta2.2cat.json", "--fix-objects"]));
    for fam in ["z2.fam.json", "z3.fam.json"] {
        runs.push(owned(&["h2", "--groupoid", "z2.cat.json", "--family", fam]));
        runs.push(owned(&["h2", "--groupoid", "z2.cat.json", "--family", fam, "--strict-components"]));
        runs.push(owned(&["rep-check", "--groupoid", "z2.cat.json", "--family", fam]));
    }
    runs.push(owned(&["h2", "--groupoid", "terminal.cat.json", "--family", "s3.fam.json"]));
    runs.push(owned(&["homotopy-classes", "z2.sset.json", "aut-z3.sset.json"]));
    runs.push(owned(&["homotopy-classes", "z2.sset.json", "aut-z3.sset.json", "--fix-vertices"]));
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let capture = |args: &[&str]| -> (Option<i32>, Vec<u8>, Vec<u8>, Option<Vec<u8>>) {
            let o = geonerve(args);
            let written = args.iter().position(|a| *a == "-o").map(|i| std::fs::read(args[i + 1]).unwrap_or_default());
            (o.status.code(), o.stdout, o.stderr, written)
        };
        let first = capture(&args);
        let second = capture(&args);
        ensure(first == second, || format!("`{}` is not deterministic", args.join(" ")))?;
        ensure(first.0 != Some(2), || format!("`{}` failed with a usage error", args.join(" ")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("simplicial identities of nerves", simplicial_identities),
        ("agreement with the classic nerve", classic_agreement),
        ("simplices are lax functors from [n]", simplex_duality),
        ("nerve is full and faithful", full_and_faithful),
        ("nerve is functorial", functoriality),
        ("homotopies are transformations", homotopy_transformation),
        ("H2 represented by homotopy classes", representation),
        ("deterministic CLI output", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {} ({name}): PASS [{secs:.1}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.1}s]: {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
