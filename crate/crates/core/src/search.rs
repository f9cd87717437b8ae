//! Branch counting for the exhaustive enumerators.

use crate::error::{Error, Result};

/// Default cap on candidate branches explored by a single enumeration.
pub const DEFAULT_MAX_BRANCHES: u64 = 10_000_000;

/// A counter shared by the backtracking searches; every candidate value
/// tried for a variable costs one branch.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self { limit: None, used: 0 }
    }

    pub fn limited(limit: u64) -> Self {
        Self {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub(crate) fn spend(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::SearchLimit { limit }),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::limited(DEFAULT_MAX_BRANCHES)
    }
}

type Domain<'a> = Box<dyn Fn(&[usize]) -> Vec<usize> + 'a>;
type Check<'a> = Box<dyn Fn(&[usize]) -> bool + 'a>;

/// A finite constraint problem solved by depth-first search over its
/// variables in index order.
///
/// The domain of variable `i` may depend on the values of variables `< i`.
/// Each check is attached to the last variable it reads and runs as soon as
/// that variable is assigned, so solutions come out in lexicographic order
/// of their value vectors whenever the domains are sorted.
pub(crate) struct Search<'a> {
    domains: Vec<Domain<'a>>,
    checks: Vec<Vec<Check<'a>>>,
}

impl<'a> Search<'a> {
    pub(crate) fn new() -> Self {
        Self {
            domains: Vec::new(),
            checks: Vec::new(),
        }
    }

    /// Adds a variable and returns its index.
    pub(crate) fn var(&mut self, domain: impl Fn(&[usize]) -> Vec<usize> + 'a) -> usize {
        self.domains.push(Box::new(domain));
        self.checks.push(Vec::new());
        self.domains.len() - 1
    }

    /// Attaches a check that may read every variable up to `last`.
    pub(crate) fn check(&mut self, last: usize, check: impl Fn(&[usize]) -> bool + 'a) {
        self.checks[last].push(Box::new(check));
    }

    pub(crate) fn len(&self) -> usize {
        self.domains.len()
    }

    /// Calls `visit` on every solution until it returns `false`.
    pub(crate) fn run(&self, budget: &mut Budget, mut visit: impl FnMut(&[usize]) -> Result<bool>) -> Result<()> {
        let mut assign = Vec::with_capacity(self.len());
        self.go(&mut assign, budget, &mut visit).map(|_| ())
    }

    pub(crate) fn all(&self, budget: &mut Budget) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        self.run(budget, |s| {
            out.push(s.to_vec());
            Ok(true)
        })?;
        Ok(out)
    }

    pub(crate) fn first(&self, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
        let mut out = None;
        self.run(budget, |s| {
            out = Some(s.to_vec());
            Ok(false)
        })?;
        Ok(out)
    }

    fn go(
        &self,
        assign: &mut Vec<usize>,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        let i = assign.len();
        if i == self.len() {
            return visit(assign);
        }
        for value in (self.domains[i])(assign) {
            budget.spend(1)?;
            assign.push(value);
            if self.checks[i].iter().all(|c| c(assign)) && !self.go(assign, budget, visit)? {
                assign.pop();
                return Ok(false);
            }
            assign.pop();
        }
        Ok(true)
    }
}
