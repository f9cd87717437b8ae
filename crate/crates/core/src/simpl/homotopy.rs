use super::{SimplicialMap, TruncSSet, TOP};
use crate::error::{ValidationErrors, Violation};

/// Components `h_j^n : X_n → Y_{n+1}` for `n ≤ 2`, indexed `[n][j][x]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HomotopyData {
    pub components: Vec<Vec<Vec<usize>>>,
}

/// A validated homotopy `p ⇒ q` between parallel simplicial maps, with
/// `d_0 h_0^0 = p_0` and `d_1 h_0^0 = q_0`.
///
/// Components above level 2 are not stored. When the codomain is coskeletal
/// they are the face families forced by the identities, and validation
/// checks that each family is a 4-simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homotopy {
    p: SimplicialMap,
    q: SimplicialMap,
    h: Vec<Vec<Vec<usize>>>,
}

impl Homotopy {
    pub fn validate(p: &SimplicialMap, q: &SimplicialMap, data: HomotopyData) -> Result<Self, ValidationErrors> {
        let mut errs = ValidationErrors::default();
        if p.dom() != q.dom() || p.cod() != q.cod() {
            errs.push(Violation::new("parallel maps", "p and q have different domain or codomain"));
            return Err(errs);
        }
        let (x, y) = (&**p.dom(), &**p.cod());
        let h = data.components;
        let shape_ok = h.len() == TOP
            && (0..TOP).all(|n| {
                h[n].len() == n + 1 && h[n].iter().all(|col| col.len() == x.size(n) && col.iter().all(|&v| v < y.size(n + 1)))
            });
        if !shape_ok {
            errs.push(Violation::new("level mismatch", "components must be h_j^n for n ≤ 2 and j ≤ n, landing in Y_{n+1}"));
            return Err(errs);
        }
        let t = Self {
            p: p.clone(),
            q: q.clone(),
            h,
        };
        t.check_low(&mut errs);
        if errs.is_empty() && y.is_coskeletal() {
            t.check_top(&mut errs);
        }
        errs.into_result(|| t)
    }

    /// The constant homotopy `h_j^n = s_j ∘ p_n` on `p`.
    pub fn constant(p: &SimplicialMap) -> Self {
        let (x, y) = (&**p.dom(), &**p.cod());
        let h = (0..TOP)
            .map(|n| (0..=n).map(|j| (0..x.size(n)).map(|s| y.degen(n, j, p.apply(n, s))).collect()).collect())
            .collect();
        Self {
            p: p.clone(),
            q: p.clone(),
            h,
        }
    }

    pub fn p(&self) -> &SimplicialMap {
        &self.p
    }

    pub fn q(&self) -> &SimplicialMap {
        &self.q
    }

    /// `h_j^n(x)`.
    pub fn component(&self, n: usize, j: usize, x: usize) -> usize {
        self.h[n][j][x]
    }

    pub fn data(&self) -> HomotopyData {
        HomotopyData {
            components: self.h.clone(),
        }
    }

    fn check_low(&self, errs: &mut ValidationErrors) {
        let (x, y) = (&**self.p.dom(), &**self.p.cod());
        let h = &self.h;
        for n in 0..TOP {
            for s in 0..x.size(n) {
                let wit = || x.name(n, s).to_string();
                for j in 0..=n {
                    let c = h[n][j][s];
                    for a in 0..=n + 1 {
                        let got = y.face(n + 1, a, c);
                        let (want, law) = if a == 0 && j == 0 {
                            (self.p.apply(n, s), "d_0 h_0 = p".to_string())
                        } else if a == n + 1 && j == n {
                            (self.q.apply(n, s), format!("d_{a} h_{n} = q"))
                        } else if a < j {
                            (h[n - 1][j - 1][x.face(n, a, s)], format!("d_{a} h_{j} = h_{} d_{a}", j - 1))
                        } else if a == j {
                            (y.face(n + 1, j, h[n][j - 1][s]), format!("d_{j} h_{j} = d_{j} h_{}", j - 1))
                        } else if a == j + 1 {
                            continue;
                        } else {
                            (h[n - 1][j][x.face(n, a - 1, s)], format!("d_{a} h_{j} = h_{j} d_{}", a - 1))
                        };
                        if got != want {
                            errs.push(
                                Violation::new(law, format!("homotopy face identity fails at level {n}")).with([wit()]),
                            );
                        }
                    }
                    if n + 1 < TOP {
                        for i in 0..=n + 1 {
                            let lhs = y.degen(n + 1, i, c);
                            let (rhs, law) = if i <= j {
                                (h[n + 1][j + 1][x.degen(n, i, s)], format!("s_{i} h_{j} = h_{} s_{i}", j + 1))
                            } else {
                                (h[n + 1][j][x.degen(n, i - 1, s)], format!("s_{i} h_{j} = h_{j} s_{}", i - 1))
                            };
                            if lhs != rhs {
                                errs.push(
                                    Violation::new(law, format!("homotopy degeneracy identity fails at level {n}"))
                                        .with([wit()]),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    /// The shared face `d_k h_k^3(x) = d_k h_{k-1}^3(x)`, `1 ≤ k ≤ 3`.
    fn shared(&self, s: usize, k: usize) -> Option<usize> {
        let (x, y) = (&**self.p.dom(), &**self.p.cod());
        let faces: Vec<usize> = (0..=TOP)
            .map(|a| {
                let c = self.h[2][k - 1][x.face(TOP, a, s)];
                if a < k {
                    y.face(TOP, k - 1, c)
                } else {
                    y.face(TOP, k, c)
                }
            })
            .collect();
        y.with_boundary(TOP, &faces).first().copied()
    }

    /// The five faces of `h_j^3(x)` for `j = 0..=3`.
    fn families(&self, s: usize) -> Option<Vec<[usize; 5]>> {
        let x = &**self.p.dom();
        let shared: Vec<usize> = (1..=TOP).map(|k| self.shared(s, k)).collect::<Option<_>>()?;
        Some(
            (0..=TOP)
                .map(|j| {
                    let mut f = [0; 5];
                    for (a, slot) in f.iter_mut().enumerate() {
                        *slot = if a < j {
                            self.h[2][j - 1][x.face(TOP, a, s)]
                        } else if a == j {
                            if j == 0 {
                                self.p.apply(TOP, s)
                            } else {
                                shared[j - 1]
                            }
                        } else if a == j + 1 {
                            if j == TOP {
                                self.q.apply(TOP, s)
                            } else {
                                shared[j]
                            }
                        } else {
                            self.h[2][j][x.face(TOP, a - 1, s)]
                        };
                    }
                    f
                })
                .collect(),
        )
    }

    fn compatible(y: &TruncSSet, f: &[usize; 5]) -> bool {
        (1..5).all(|b| (0..b).all(|a| y.face(TOP, a, f[b]) == y.face(TOP, b - 1, f[a])))
    }

    fn check_top(&self, errs: &mut ValidationErrors) {
        let (x, y) = (&**self.p.dom(), &**self.p.cod());
        let mut fams = Vec::with_capacity(x.size(TOP));
        for s in 0..x.size(TOP) {
            let wit = || x.name(TOP, s).to_string();
            match self.families(s) {
                None => {
                    errs.push(
                        Violation::new("level-3 boundary", "a forced face of h^3 bounds no 3-simplex").with([wit()]),
                    );
                    fams.push(None);
                }
                Some(f) => {
                    for (j, fj) in f.iter().enumerate() {
                        if !Self::compatible(y, fj) {
                            errs.push(
                                Violation::new("level-3 boundary", format!("faces of h_{j}^3 are not compatible"))
                                    .with([wit()]),
                            );
                        }
                    }
                    fams.push(Some(f));
                }
            }
        }
        for s in 0..x.size(2) {
            for j in 0..=2 {
                let c = self.h[2][j][s];
                for i in 0..=TOP {
                    let lhs: [usize; 5] = std::array::from_fn(|a| {
                        if a < i {
                            y.degen(2, i - 1, y.face(TOP, a, c))
                        } else if a == i || a == i + 1 {
                            c
                        } else {
                            y.degen(2, i, y.face(TOP, a - 1, c))
                        }
                    });
                    let (t, jj, law) = if i <= j {
                        (x.degen(2, i, s), j + 1, format!("s_{i} h_{j} = h_{} s_{i}", j + 1))
                    } else {
                        (x.degen(2, i - 1, s), j, format!("s_{i} h_{j} = h_{j} s_{}", i - 1))
                    };
                    if let Some(f) = &fams[t] {
                        if f[jj] != lhs {
                            errs.push(
                                Violation::new(law, "homotopy degeneracy identity fails at level 2")
                                    .with([x.name(2, s).to_string()]),
                            );
                        }
                    }
                }
            }
        }
    }
}
