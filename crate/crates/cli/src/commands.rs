use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Serialize;

use geonerve::cohom::{self, Cocycle, FiniteGroup, GroupFamily};
use geonerve::format::{
    read_json, to_json, CategoryFile, FamilyFile, FileRef, GroupFile, LaxFunctorFile, LaxFunctorListFile, SMapFile,
    SSetFile, TwoCatFile,
};
use geonerve::laxfun::{enumerate_lax_functors, ComponentPolicy, LaxFunctor};
use geonerve::nerve::{nerve_of_lax_functor, reconstruct_lax_functor, Nerve};
use geonerve::search::Budget;
use geonerve::simpl::{homotopy_classes_over, SimplicialMap, TruncSSet};
use geonerve::twocat::{Category, TwoCat};

use crate::failure::Failure;
use crate::Kind;

fn dir_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Usage(format!("stdout: {e}")))
        }
    }
}

fn two_cat(raw: &TwoCatFile) -> Result<Arc<TwoCat>, Failure> {
    Ok(Arc::new(TwoCat::validate(raw)?))
}

fn load_two_cat(path: &Path) -> Result<(Arc<TwoCat>, TwoCatFile), Failure> {
    let raw: TwoCatFile = read_json(path)?;
    Ok((two_cat(&raw)?, raw))
}

fn load_category(path: &Path) -> Result<Category, Failure> {
    Ok(Category::validate(&read_json::<CategoryFile>(path)?)?)
}

fn load_sset(path: &Path) -> Result<Arc<TruncSSet>, Failure> {
    Ok(Arc::new(TruncSSet::validate(&read_json::<SSetFile>(path)?)?))
}

fn load_family(path: &Path) -> Result<GroupFamily, Failure> {
    let raw: FamilyFile = read_json(path)?;
    let base = dir_of(path);
    let mut groups = BTreeMap::new();
    for (x, r) in &raw {
        let (g, _) = r.load(&base)?;
        groups.insert(x.clone(), FiniteGroup::validate(&g)?);
    }
    Ok(GroupFamily::new(groups))
}

fn load_lax_functor(path: &Path) -> Result<LaxFunctor, Failure> {
    let raw: LaxFunctorFile = read_json(path)?;
    lax_functor_from(&raw, &dir_of(path))
}

fn lax_functor_from(raw: &LaxFunctorFile, base: &Path) -> Result<LaxFunctor, Failure> {
    let (dom, _) = raw.dom.load(base)?;
    let (cod, _) = raw.cod.load(base)?;
    Ok(LaxFunctor::from_file(raw, two_cat(&dom)?, two_cat(&cod)?)?)
}

fn load_smap(path: &Path, dom: Option<Arc<TruncSSet>>, cod: Option<Arc<TruncSSet>>) -> Result<SimplicialMap, Failure> {
    let raw: SMapFile = read_json(path)?;
    let base = dir_of(path);
    let resolve = |r: &FileRef<SSetFile>, known: Option<Arc<TruncSSet>>| -> Result<Arc<TruncSSet>, Failure> {
        let (doc, _) = r.load(&base)?;
        let set = Arc::new(TruncSSet::validate(&doc)?);
        match known {
            Some(k) if *k == *set => Ok(k),
            Some(_) => Err(Failure::Check("the map's simplicial sets are not the nerves of the given 2-categories".into())),
            None => Ok(set),
        }
    };
    let dom = resolve(&raw.dom, dom)?;
    let cod = resolve(&raw.cod, cod)?;
    Ok(SimplicialMap::from_file(&raw, dom, cod)?)
}

fn kind_of(path: &Path) -> Option<Kind> {
    let name = path.file_name()?.to_str()?;
    [
        (".2cat.json", Kind::TwoCat),
        (".cat.json", Kind::Cat),
        (".sset.json", Kind::Sset),
        (".group.json", Kind::Group),
        (".fam.json", Kind::Fam),
        (".laxfuns.json", Kind::Laxfuns),
        (".laxfun.json", Kind::Laxfun),
        (".smap.json", Kind::Smap),
    ]
    .into_iter()
    .find(|(suffix, _)| name.ends_with(suffix))
    .map(|(_, k)| k)
}

pub fn validate(path: &Path, kind: Option<Kind>) -> Result<(), Failure> {
    let kind = kind.or_else(|| kind_of(path)).ok_or_else(|| {
        Failure::Usage(format!("cannot tell the kind of {} from its name; pass --kind", path.display()))
    })?;
    let line = match kind {
        Kind::TwoCat => {
            let (c, _) = load_two_cat(path)?;
            format!(
                "valid 2-category: {} objects, {} 1-cells, {} 2-cells",
                c.num_objects(),
                c.num_arrows(),
                c.num_cells()
            )
        }
        Kind::Cat => {
            let c = load_category(path)?;
            format!("valid category: {} objects, {} arrows", c.objects().len(), c.arrows().len())
        }
        Kind::Sset => {
            let s = load_sset(path)?;
            let [a, b, c, d] = s.sizes();
            format!("valid simplicial set: level sizes {a}, {b}, {c}, {d}")
        }
        Kind::Group => {
            let g = FiniteGroup::validate(&read_json::<GroupFile>(path)?)?;
            format!("valid group of order {}", g.order())
        }
        Kind::Fam => {
            let f = load_family(path)?;
            format!("valid group family over {} objects", f.base().count())
        }
        Kind::Laxfun => {
            let f = load_lax_functor(path)?;
            format!("valid lax functor{}", if f.is_strict() { " (strict)" } else { "" })
        }
        Kind::Laxfuns => {
            let raw: LaxFunctorListFile = read_json(path)?;
            if raw.count != raw.functors.len() {
                return Err(Failure::Invalid(
                    geonerve::Violation::new("count mismatch", "count differs from the number of functors").into(),
                ));
            }
            for f in &raw.functors {
                lax_functor_from(f, &dir_of(path))?;
            }
            format!("valid list of {} lax functors", raw.count)
        }
        Kind::Smap => {
            load_smap(path, None, None)?;
            "valid simplicial map".to_string()
        }
    };
    emit(None, &format!("{line}\n"))
}

pub fn nerve(path: &Path, output: Option<&Path>) -> Result<(), Failure> {
    let (c, _) = load_two_cat(path)?;
    let n = Nerve::new(c);
    emit(output, &to_json(&n.sset().to_file()))
}

pub fn nerve_map(path: &Path, output: Option<&Path>) -> Result<(), Failure> {
    let f = load_lax_functor(path)?;
    let (nd, nc) = (Nerve::new(f.dom().clone()), Nerve::new(f.cod().clone()));
    let m = nerve_of_lax_functor(&f, &nd, &nc)?;
    let file = m.to_file(
        FileRef::Inline(Box::new(nd.sset().to_file())),
        FileRef::Inline(Box::new(nc.sset().to_file())),
        false,
    );
    emit(output, &to_json(&file))
}

pub fn reconstruct(smap: &Path, dom: &Path, cod: &Path, output: Option<&Path>) -> Result<(), Failure> {
    let (c, craw) = load_two_cat(dom)?;
    let (d, draw) = load_two_cat(cod)?;
    let (nc, nd) = (Nerve::new(c), Nerve::new(d));
    let m = load_smap(smap, Some(nc.sset().clone()), Some(nd.sset().clone()))?;
    let f = reconstruct_lax_functor(&m, &nc, &nd)?;
    let file = f.to_file(FileRef::Inline(Box::new(craw)), FileRef::Inline(Box::new(draw)));
    emit(output, &to_json(&file))
}

pub fn enum_lax(
    dom: &Path,
    cod: &Path,
    fix_objects: bool,
    output: Option<&Path>,
    budget: &mut Budget,
) -> Result<(), Failure> {
    let (c, craw) = load_two_cat(dom)?;
    let (d, draw) = load_two_cat(cod)?;
    let objects = if fix_objects {
        let objs = c
            .objects()
            .map(|o| {
                d.find_obj(c.obj_name(o))
                    .ok_or_else(|| Failure::Usage(format!("object `{}` has no namesake in the codomain", c.obj_name(o))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Some(objs)
    } else {
        None
    };
    let fs = enumerate_lax_functors(&c, &d, objects.as_deref(), budget)?;
    let file = LaxFunctorListFile {
        count: fs.len(),
        functors: fs
            .iter()
            .map(|f| f.to_file(FileRef::Inline(Box::new(craw.clone())), FileRef::Inline(Box::new(draw.clone()))))
            .collect(),
    };
    emit(output, &to_json(&file))
}

#[derive(Serialize)]
struct H2Class {
    size: usize,
    #[serde(flatten)]
    cocycle: Cocycle,
}

#[derive(Serialize)]
struct H2Output {
    functors: usize,
    classes: usize,
    representatives: Vec<H2Class>,
}

pub fn h2(
    groupoid: &Path,
    family: &Path,
    strict_components: bool,
    output: Option<&Path>,
    budget: &mut Budget,
) -> Result<(), Failure> {
    let g = load_category(groupoid)?;
    let k = load_family(family)?;
    let policy = if strict_components {
        ComponentPolicy::Identity
    } else {
        ComponentPolicy::Any
    };
    let h = cohom::h2(&g, &k, policy, budget)?;
    let sizes = h.classes.sizes();
    let out = H2Output {
        functors: h.classes.items.len(),
        classes: h.num_classes(),
        representatives: h
            .representatives()
            .into_iter()
            .zip(sizes)
            .map(|(cocycle, size)| H2Class { size, cocycle })
            .collect(),
    };
    emit(output, &to_json(&out))
}

pub fn rep_check(groupoid: &Path, family: &Path, output: Option<&Path>, budget: &mut Budget) -> Result<(), Failure> {
    let g = load_category(groupoid)?;
    let k = load_family(family)?;
    let report = cohom::representation_check(&g, &k, budget)?;
    let mut text = format!("{}\n", report.summary());
    text.push_str(&format!("vertex-constrained homotopy classes: {}\n", report.vertex_constrained_classes));
    if report.discrepancy() {
        text.push_str("note: counting all maps and counting vertex-preserving maps disagree\n");
    }
    emit(None, &text)?;
    if let Some(path) = output {
        emit(Some(path), &to_json(&report))?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check("the class map is not a bijection".into()))
    }
}

#[derive(Serialize)]
struct ClassesOutput {
    maps: usize,
    classes: usize,
    sizes: Vec<usize>,
    representatives: Vec<BTreeMap<String, BTreeMap<String, String>>>,
}

pub fn homotopy_classes(
    dom: &Path,
    cod: &Path,
    fix_vertices: bool,
    output: Option<&Path>,
    budget: &mut Budget,
) -> Result<(), Failure> {
    let x = load_sset(dom)?;
    let y = load_sset(cod)?;
    let vertices = if fix_vertices {
        let v = (0..x.size(0))
            .map(|v| {
                y.find(0, x.name(0, v))
                    .ok_or_else(|| Failure::Usage(format!("vertex `{}` has no namesake in the codomain", x.name(0, v))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Some(v)
    } else {
        None
    };
    let classes = homotopy_classes_over(&x, &y, vertices.as_deref(), budget)?;
    let representatives = (0..classes.num_classes())
        .map(|c| {
            let m = classes.representative(c);
            let file = m.to_file(FileRef::Path(String::new()), FileRef::Path(String::new()), false);
            [("phi0", file.phi0), ("phi1", file.phi1), ("phi2", file.phi2)]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect()
        })
        .collect();
    let out = ClassesOutput {
        maps: classes.items.len(),
        classes: classes.num_classes(),
        sizes: classes.sizes(),
        representatives,
    };
    emit(output, &to_json(&out))
}
