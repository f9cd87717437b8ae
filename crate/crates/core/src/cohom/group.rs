//! Finite groups, object-indexed families of them, and the automorphism
//! 2-groupoid of a family.

use std::collections::{BTreeMap, HashMap};

use crate::error::{ValidationErrors, Violation};
use crate::format::{CellRecord, Comp1Entry, Comp2Entry, GroupFile, TwoCatFile};
use crate::twocat::{Arrow, Cell, TwoCat};

/// A finite group with elements sorted by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    elements: Vec<String>,
    unit: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn validate(raw: &GroupFile) -> Result<Self, ValidationErrors> {
        let mut errs = ValidationErrors::default();
        let mut elements = raw.elements.clone();
        elements.sort();
        let before = elements.len();
        elements.dedup();
        if elements.len() != before {
            errs.push(Violation::new("duplicate identifier", "element listed twice"));
        }
        if elements.is_empty() {
            errs.push(Violation::new("empty group", "a group needs at least its unit"));
            return Err(errs);
        }
        let ix: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        let get = |name: &str, errs: &mut ValidationErrors| {
            let r = ix.get(name).copied();
            if r.is_none() {
                errs.push(
                    Violation::new("dangling identifier", format!("unknown element `{name}`")).with([name.to_string()]),
                );
            }
            r
        };
        let n = elements.len();
        let unit = get(&raw.unit, &mut errs);
        let mut mult = vec![None; n * n];
        for (a, b, c) in &raw.mult {
            if let (Some(a), Some(b), Some(c)) = (get(a, &mut errs), get(b, &mut errs), get(c, &mut errs)) {
                if mult[a * n + b].is_some_and(|prev| prev != c) {
                    errs.push(
                        Violation::new("conflicting table entry", "product listed twice with different results")
                            .with([elements[a].clone(), elements[b].clone()]),
                    );
                }
                mult[a * n + b] = Some(c);
            }
        }
        for a in 0..n {
            for b in 0..n {
                if mult[a * n + b].is_none() {
                    errs.push(
                        Violation::new("partial table", "product missing")
                            .with([elements[a].clone(), elements[b].clone()]),
                    );
                }
            }
        }
        let Some(unit) = unit.filter(|_| errs.is_empty()) else {
            return Err(errs);
        };
        let mult: Vec<usize> = mult.into_iter().map(Option::unwrap).collect();
        let m = |a: usize, b: usize| mult[a * n + b];
        for a in 0..n {
            if m(unit, a) != a || m(a, unit) != a {
                errs.push(Violation::new("group unit law", "unit does not act trivially").with([elements[a].clone()]));
            }
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        errs.push(Violation::new("group associativity", "(ab)c differs from a(bc)").with([
                            elements[a].clone(),
                            elements[b].clone(),
                            elements[c].clone(),
                        ]));
                    }
                }
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            match (0..n).find(|&b| m(a, b) == unit && m(b, a) == unit) {
                Some(b) => inv[a] = b,
                None => errs.push(Violation::new("group inverses", "element has no inverse").with([elements[a].clone()])),
            }
        }
        if let Some(given) = &raw.inv {
            for (a, b) in given {
                if let (Some(a), Some(b)) = (get(a, &mut errs), get(b, &mut errs)) {
                    if inv[a] != b {
                        errs.push(
                            Violation::new("group inverses", "declared inverse is wrong")
                                .with([elements[a].clone(), elements[b].clone()]),
                        );
                    }
                }
            }
        }
        errs.into_result(|| Self {
            elements,
            unit,
            mult,
            inv,
        })
    }

    /// Builds a group from element names and a product on positions in `names`.
    pub fn from_table(names: &[String], unit: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut raw = GroupFile {
            elements: names.to_vec(),
            unit: names[unit].clone(),
            ..Default::default()
        };
        for a in 0..names.len() {
            for b in 0..names.len() {
                raw.mult.push((names[a].clone(), names[b].clone(), names[mul(a, b)].clone()));
            }
        }
        Self::validate(&raw).expect("table defines a group")
    }

    /// ℤ/n with elements `"0"`, …, `"n-1"`.
    pub fn cyclic(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::from_table(&names, 0, |a, b| (a + b) % n)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The symmetric group on `{0, …, n-1}`; elements are one-line images,
    /// e.g. `"021"`. Product `ab` means "apply b, then a".
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=9).contains(&n), "symmetric groups are supported for 1 ≤ n ≤ 9");
        let total: usize = (1..=n).product();
        let mut out = Vec::with_capacity(total);
        let mut cur: Vec<usize> = (0..n).collect();
        for _ in 0..total {
            out.push(cur.clone());
            next_permutation(&mut cur);
        }
        let name = |p: &[usize]| p.iter().map(|d| d.to_string()).collect::<String>();
        let names: Vec<String> = out.iter().map(|p| name(p)).collect();
        let pos: HashMap<Vec<usize>, usize> = out.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Self::from_table(&names, 0, |a, b| {
            let c: Vec<usize> = (0..n).map(|i| out[a][out[b][i]]).collect();
            pos[&c]
        })
    }

    /// Direct product with elements named `"(a,b)"`.
    pub fn product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order(), other.order());
        let names: Vec<String> = (0..n * m)
            .map(|i| format!("({},{})", self.elements[i / m], other.elements[i % m]))
            .collect();
        Self::from_table(&names, self.unit * m + other.unit, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
    }

    pub fn to_file(&self) -> GroupFile {
        let n = self.order();
        GroupFile {
            elements: self.elements.clone(),
            unit: self.elements[self.unit].clone(),
            mult: (0..n * n)
                .map(|i| {
                    let (a, b) = (i / n, i % n);
                    (
                        self.elements[a].clone(),
                        self.elements[b].clone(),
                        self.elements[self.mul(a, b)].clone(),
                    )
                })
                .collect(),
            inv: Some(
                (0..n)
                    .map(|a| (self.elements[a].clone(), self.elements[self.inv[a]].clone()))
                    .collect(),
            ),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_str().cmp(name)).ok()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `k a k⁻¹`
    pub fn conj(&self, k: usize, a: usize) -> usize {
        self.mul(self.mul(k, a), self.inv(k))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// All group isomorphisms `self → other` as image tables, in
    /// lexicographic order of the tables.
    pub fn isomorphisms_to(&self, other: &FiniteGroup) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut out = Vec::new();
        if n != other.order() {
            return out;
        }
        let mut img = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, 0, &mut img, &mut used, &mut out);
        out
    }

    fn extend_iso(
        &self,
        other: &FiniteGroup,
        next: usize,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = self.order();
        if next == n {
            out.push(img.clone());
            return;
        }
        for y in 0..n {
            if used[y] {
                continue;
            }
            img[next] = y;
            let ok = (0..=next).all(|a| {
                [(a, next), (next, a)].into_iter().all(|(x1, x2)| {
                    let p = self.mul(x1, x2);
                    img[p] == usize::MAX || img[p] == other.mul(img[x1], img[x2])
                }) && (0..=next).all(|b| {
                    let p = self.mul(a, b);
                    p > next || img[p] == other.mul(img[a], img[b])
                })
            });
            if ok {
                used[y] = true;
                self.extend_iso(other, next + 1, img, used, out);
                used[y] = false;
            }
            img[next] = usize::MAX;
        }
    }
}

fn next_permutation(p: &mut [usize]) {
    let n = p.len();
    if n < 2 {
        return;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.reverse();
        return;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
}

/// Groups indexed by the objects of a groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFamily {
    groups: BTreeMap<String, FiniteGroup>,
}

impl GroupFamily {
    pub fn new(groups: BTreeMap<String, FiniteGroup>) -> Self {
        Self { groups }
    }

    /// A single group over the object `*` of a one-object groupoid.
    pub fn single(group: FiniteGroup) -> Self {
        Self::new([("*".to_string(), group)].into())
    }

    pub fn base(&self) -> impl Iterator<Item = &str> {
        self.groups.keys().map(String::as_str)
    }

    pub fn group(&self, x: &str) -> Option<&FiniteGroup> {
        self.groups.get(x)
    }

    pub fn groups(&self) -> &BTreeMap<String, FiniteGroup> {
        &self.groups
    }
}

/// The automorphism 2-groupoid of a group family, together with the group
/// data behind each of its cells.
#[derive(Debug, Clone)]
pub struct AutTwoGroupoid {
    cat: TwoCat,
    // per 1-cell: (source object, target object, image table)
    isos: Vec<(String, String, Vec<usize>)>,
    // per 2-cell: conjugating element of the target group
    elements: Vec<usize>,
}

impl AutTwoGroupoid {
    pub fn new(family: &GroupFamily) -> Self {
        let base: Vec<&String> = family.groups.keys().collect();
        let iso_name = |x: &str, y: &str, img: &[usize]| {
            let k = &family.groups[y];
            let parts: Vec<&str> = img.iter().map(|&i| k.name(i)).collect();
            format!("{x}>{y}:{}", parts.join(","))
        };
        let mut isos: Vec<(String, String, Vec<usize>)> = Vec::new();
        for x in &base {
            for y in &base {
                for img in family.groups[*x].isomorphisms_to(&family.groups[*y]) {
                    isos.push(((*x).clone(), (*y).clone(), img));
                }
            }
        }
        let names: Vec<String> = isos.iter().map(|(x, y, img)| iso_name(x, y, img)).collect();
        let by_key: HashMap<(String, String, Vec<usize>), usize> =
            isos.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let compose = |a: usize, b: usize| -> usize {
            // b ∘ a
            let (x, _, ia) = &isos[a];
            let (_, z, ib) = &isos[b];
            let img: Vec<usize> = ia.iter().map(|&v| ib[v]).collect();
            by_key[&(x.clone(), z.clone(), img)]
        };

        // 2-cells φ ⇒ ψ are the k in K_y with k φ(g) k⁻¹ = ψ(g) for all g.
        let mut cells: Vec<(usize, usize, usize)> = Vec::new();
        for (a, (x, y, phi)) in isos.iter().enumerate() {
            for (b, (x2, y2, psi)) in isos.iter().enumerate() {
                if x != x2 || y != y2 {
                    continue;
                }
                let ky = &family.groups[y];
                for k in 0..ky.order() {
                    if (0..phi.len()).all(|g| ky.conj(k, phi[g]) == psi[g]) {
                        cells.push((a, b, k));
                    }
                }
            }
        }
        let cell_name =
            |(a, b, k): (usize, usize, usize)| format!("{}=>{}@{}", names[a], names[b], family.groups[&isos[b].1].name(k));
        let cell_ix: HashMap<(usize, usize, usize), usize> = cells.iter().copied().enumerate().map(|(i, c)| (c, i)).collect();

        let mut raw = TwoCatFile {
            objects: base.iter().map(|s| (*s).clone()).collect(),
            ..Default::default()
        };
        for (i, (x, y, _)) in isos.iter().enumerate() {
            raw.one_cells.push(CellRecord::new(names[i].clone(), x.clone(), y.clone()));
        }
        for x in &base {
            let k = &family.groups[*x];
            let id: Vec<usize> = (0..k.order()).collect();
            raw.id1.insert((*x).clone(), iso_name(x, x, &id));
        }
        for a in 0..isos.len() {
            for b in 0..isos.len() {
                if isos[a].1 == isos[b].0 {
                    raw.comp1.push(Comp1Entry {
                        f: names[a].clone(),
                        g: names[b].clone(),
                        result: names[compose(a, b)].clone(),
                    });
                }
            }
        }
        for &c in &cells {
            raw.two_cells
                .push(CellRecord::new(cell_name(c), names[c.0].clone(), names[c.1].clone()));
        }
        for (a, (_, y, _)) in isos.iter().enumerate() {
            raw.id2
                .insert(names[a].clone(), cell_name((a, a, family.groups[y].unit())));
        }
        for &(a, b, k) in &cells {
            let ky = &family.groups[&isos[b].1];
            // vertical: (b ⇒ c, k2) · (a ⇒ b, k) = (a ⇒ c, k2 k)
            for &(b2, c2, k2) in &cells {
                if b2 == b {
                    raw.vcomp.push(Comp2Entry {
                        alpha: cell_name((a, b, k)),
                        beta: cell_name((b2, c2, k2)),
                        result: cell_name((a, c2, ky.mul(k2, k))),
                    });
                }
            }
            // horizontal: (χ ⇒ χ′, k2) ∗ (φ ⇒ φ′, k) = (χφ ⇒ χ′φ′, χ′(k) k2)
            for &(chi, chi2, k2) in &cells {
                if isos[chi].0 != isos[a].1 {
                    continue;
                }
                let kz = &family.groups[&isos[chi].1];
                let elem = kz.mul(isos[chi2].2[k], k2);
                let c = (compose(a, chi), compose(b, chi2), elem);
                debug_assert!(cell_ix.contains_key(&c));
                raw.hcomp.push(Comp2Entry {
                    alpha: cell_name((a, b, k)),
                    beta: cell_name((chi, chi2, k2)),
                    result: cell_name(c),
                });
            }
        }
        let cat = TwoCat::validate(&raw).expect("automorphism 2-groupoid satisfies the 2-category laws");

        let mut iso_of = vec![0; isos.len()];
        for (i, n) in names.iter().enumerate() {
            iso_of[cat.find_arrow(n).unwrap().0] = i;
        }
        let sorted_isos = (0..isos.len()).map(|a| isos[iso_of[a]].clone()).collect();
        let mut elements = vec![0; cells.len()];
        for &c in &cells {
            elements[cat.find_cell(&cell_name(c)).unwrap().0] = c.2;
        }
        Self {
            cat,
            isos: sorted_isos,
            elements,
        }
    }

    pub fn two_cat(&self) -> &TwoCat {
        &self.cat
    }

    pub fn into_two_cat(self) -> TwoCat {
        self.cat
    }

    /// Image table of the isomorphism behind a 1-cell.
    pub fn iso(&self, f: Arrow) -> &[usize] {
        &self.isos[f.0].2
    }

    /// Conjugating element behind a 2-cell.
    pub fn element(&self, c: Cell) -> usize {
        self.elements[c.0]
    }
}

/// The 2-groupoid whose objects are the groups of the family, 1-cells the
/// group isomorphisms and 2-cells the conjugating elements between them.
pub fn automorphism_two_groupoid(family: &GroupFamily) -> TwoCat {
    AutTwoGroupoid::new(family).into_two_cat()
}
