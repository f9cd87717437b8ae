//! Finite 1-categories given by explicit composition tables.

use std::collections::HashMap;

use crate::error::{ValidationErrors, Violation};
use crate::format::{CategoryFile, CellRecord, Comp1Entry};

/// A validated finite category. Objects and arrows are sorted by identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Category {
    objects: Vec<String>,
    arrows: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    // comp[f * n + g] = g ∘ f when tgt(f) = src(g)
    comp: Vec<Option<usize>>,
}

impl Category {
    pub fn validate(raw: &CategoryFile) -> Result<Self, ValidationErrors> {
        let mut errs = ValidationErrors::default();
        let objects = sorted_unique(&raw.objects, "object", &mut errs);
        let obj_ix: HashMap<&str, usize> = index_of(&objects);

        let mut arrow_recs: Vec<&CellRecord> = raw.arrows.iter().collect();
        arrow_recs.sort_by(|a, b| a.id.cmp(&b.id));
        let mut arrows = Vec::new();
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        for (i, a) in arrow_recs.iter().enumerate() {
            if i > 0 && arrow_recs[i - 1].id == a.id {
                errs.push(Violation::new("duplicate identifier", "arrow listed twice").with([a.id.clone()]));
                continue;
            }
            let s = lookup(&obj_ix, &a.src, "arrow source", &a.id, &mut errs);
            let t = lookup(&obj_ix, &a.tgt, "arrow target", &a.id, &mut errs);
            arrows.push(a.id.clone());
            src.push(s.unwrap_or(0));
            tgt.push(t.unwrap_or(0));
        }
        let arrow_ix = index_of(&arrows);
        let n = arrows.len();

        let mut identity = vec![usize::MAX; objects.len()];
        for (o, a) in &raw.identities {
            let Some(oi) = lookup(&obj_ix, o, "identity object", o, &mut errs) else {
                continue;
            };
            let Some(ai) = lookup(&arrow_ix, a, "identity arrow", o, &mut errs) else {
                continue;
            };
            if src[ai] != oi || tgt[ai] != oi {
                errs.push(
                    Violation::new("identity endpoints", "identity is not an endo-arrow on its object")
                        .with([o.clone(), a.clone()]),
                );
            }
            identity[oi] = ai;
        }
        for (oi, &a) in identity.iter().enumerate() {
            if a == usize::MAX {
                errs.push(Violation::new("partial table", "object has no identity").with([objects[oi].clone()]));
            }
        }

        let mut comp = vec![None; n * n];
        for Comp1Entry { f, g, result } in &raw.comp {
            let (Some(fi), Some(gi), Some(ri)) = (
                lookup(&arrow_ix, f, "composition entry", f, &mut errs),
                lookup(&arrow_ix, g, "composition entry", g, &mut errs),
                lookup(&arrow_ix, result, "composition entry", result, &mut errs),
            ) else {
                continue;
            };
            if tgt[fi] != src[gi] {
                errs.push(
                    Violation::new("composition on non-composable pair", "tgt(f) differs from src(g)")
                        .with([f.clone(), g.clone()]),
                );
                continue;
            }
            if src[ri] != src[fi] || tgt[ri] != tgt[gi] {
                errs.push(
                    Violation::new("composite endpoints", "result does not run from src(f) to tgt(g)")
                        .with([f.clone(), g.clone(), result.clone()]),
                );
            }
            match comp[fi * n + gi] {
                Some(prev) if prev != ri => errs.push(
                    Violation::new("conflicting table entry", "pair composed twice with different results")
                        .with([f.clone(), g.clone()]),
                ),
                _ => comp[fi * n + gi] = Some(ri),
            }
        }
        if !errs.is_empty() {
            return Err(errs);
        }
        for f in 0..n {
            for g in 0..n {
                if tgt[f] == src[g] && comp[f * n + g].is_none() {
                    errs.push(
                        Violation::new("partial table", "composable pair has no composite")
                            .with([arrows[f].clone(), arrows[g].clone()]),
                    );
                }
            }
        }
        if !errs.is_empty() {
            return Err(errs);
        }

        let cat = Self {
            objects,
            arrows,
            src,
            tgt,
            identity,
            comp,
        };
        cat.check_laws(&mut errs);
        errs.into_result(|| cat)
    }

    fn check_laws(&self, errs: &mut ValidationErrors) {
        for f in 0..self.arrows.len() {
            if self.compose(self.identity[self.src[f]], f) != Some(f)
                || self.compose(f, self.identity[self.tgt[f]]) != Some(f)
            {
                errs.push(Violation::new("unit law", "identity does not act trivially").with([self.arrows[f].clone()]));
            }
            for g in self.arrows_from(self.tgt[f]) {
                for h in self.arrows_from(self.tgt[g]) {
                    let left = self.compose(self.compose(f, g).unwrap(), h);
                    let right = self.compose(f, self.compose(g, h).unwrap());
                    if left != right {
                        errs.push(
                            Violation::new("associativity", "(h∘g)∘f differs from h∘(g∘f)").with([
                                self.arrows[f].clone(),
                                self.arrows[g].clone(),
                                self.arrows[h].clone(),
                            ]),
                        );
                    }
                }
            }
        }
    }

    /// The discrete-arrow category of a finite poset given by its relation.
    /// Arrow `i → j` is named `"{i}{j}"` style via `name`.
    pub fn from_preorder(
        objects: &[&str],
        le: impl Fn(usize, usize) -> bool,
        name: impl Fn(&str, &str) -> String,
    ) -> Self {
        let mut raw = CategoryFile {
            objects: objects.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        };
        let k = objects.len();
        for i in 0..k {
            for j in 0..k {
                if le(i, j) {
                    raw.arrows.push(CellRecord::new(name(objects[i], objects[j]), objects[i], objects[j]));
                }
            }
            raw.identities.insert(objects[i].to_string(), name(objects[i], objects[i]));
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    if le(i, j) && le(j, l) {
                        raw.comp.push(Comp1Entry {
                            f: name(objects[i], objects[j]),
                            g: name(objects[j], objects[l]),
                            result: name(objects[i], objects[l]),
                        });
                    }
                }
            }
        }
        Self::validate(&raw).expect("preorder composition is well defined")
    }

    /// The linear order `0 ≤ 1 ≤ … ≤ n` with arrows named `"i<j"`-style by
    /// [`crate::twocat::order_arrow_name`].
    pub fn ordinal(n: usize) -> Self {
        let names: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::from_preorder(&refs, |i, j| i <= j, super::order_arrow_name)
    }

    /// A group as a one-object category with object `*`. Elements become
    /// arrows; `mul(a, b)` is the composite "a then b".
    pub fn one_object(elements: &[String], unit: &str, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut raw = CategoryFile {
            objects: vec!["*".into()],
            ..Default::default()
        };
        for e in elements {
            raw.arrows.push(CellRecord::new(e.clone(), "*", "*"));
        }
        raw.identities.insert("*".into(), unit.to_string());
        for (a, ea) in elements.iter().enumerate() {
            for (b, eb) in elements.iter().enumerate() {
                raw.comp.push(Comp1Entry {
                    f: ea.clone(),
                    g: eb.clone(),
                    result: elements[mul(a, b)].clone(),
                });
            }
        }
        Self::validate(&raw).expect("group tables define a category")
    }

    /// The cyclic group of order `n` as a one-object groupoid, elements `"0"…`.
    pub fn cyclic_group(n: usize) -> Self {
        let elems: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::one_object(&elems, "0", |a, b| (a + b) % n)
    }

    pub fn terminal() -> Self {
        Self::cyclic_group(1)
    }

    pub fn to_file(&self) -> CategoryFile {
        let mut raw = CategoryFile {
            objects: self.objects.clone(),
            ..Default::default()
        };
        for a in 0..self.arrows.len() {
            raw.arrows.push(CellRecord::new(
                self.arrows[a].clone(),
                self.objects[self.src[a]].clone(),
                self.objects[self.tgt[a]].clone(),
            ));
        }
        for (o, &a) in self.identity.iter().enumerate() {
            raw.identities.insert(self.objects[o].clone(), self.arrows[a].clone());
        }
        for f in 0..self.arrows.len() {
            for g in self.arrows_from(self.tgt[f]) {
                raw.comp.push(Comp1Entry {
                    f: self.arrows[f].clone(),
                    g: self.arrows[g].clone(),
                    result: self.arrows[self.compose(f, g).unwrap()].clone(),
                });
            }
        }
        raw
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[String] {
        &self.arrows
    }

    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }

    pub fn tgt(&self, a: usize) -> usize {
        self.tgt[a]
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identity[o]
    }

    pub fn is_identity(&self, a: usize) -> bool {
        self.identity[self.src[a]] == a
    }

    /// `g ∘ f`, defined when `tgt(f) = src(g)`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.comp[f * self.arrows.len() + g]
    }

    pub fn arrows_from(&self, o: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.src[a] == o)
    }

    pub fn inverse(&self, f: usize) -> Option<usize> {
        self.arrows_from(self.tgt[f]).find(|&g| {
            self.compose(f, g) == Some(self.identity[self.src[f]])
                && self.compose(g, f) == Some(self.identity[self.tgt[f]])
        })
    }

    pub fn is_groupoid(&self) -> bool {
        (0..self.arrows.len()).all(|f| self.inverse(f).is_some())
    }
}

fn sorted_unique(items: &[String], what: &str, errs: &mut ValidationErrors) -> Vec<String> {
    let mut v = items.to_vec();
    v.sort();
    let before = v.len();
    v.dedup();
    if v.len() != before {
        errs.push(Violation::new("duplicate identifier", format!("{what} listed twice")));
    }
    v
}

fn index_of(items: &[String]) -> HashMap<&str, usize> {
    items.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect()
}

fn lookup(
    ix: &HashMap<&str, usize>,
    key: &str,
    context: &str,
    owner: &str,
    errs: &mut ValidationErrors,
) -> Option<usize> {
    let found = ix.get(key).copied();
    if found.is_none() {
        errs.push(
            Violation::new("dangling identifier", format!("{context} refers to unknown `{key}`"))
                .with([owner.to_string()]),
        );
    }
    found
}
