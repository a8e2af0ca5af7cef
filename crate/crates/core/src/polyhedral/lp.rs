//! Exact rational linear programming: two-phase dense simplex with Bland's
//! rule, over free variables.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub relation: Relation,
    pub rhs: Q,
}

impl Constraint {
    pub fn new(coeffs: Vec<Q>, relation: Relation, rhs: Q) -> Self {
        Constraint { coeffs, relation, rhs }
    }

    pub fn from_ints(coeffs: &[i64], relation: Relation, rhs: i64) -> Self {
        Constraint {
            coeffs: coeffs.iter().map(|&c| Q::from_integer(c.into())).collect(),
            relation,
            rhs: Q::from_integer(rhs.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Q, point: Vec<Q> },
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Q> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

struct Tableau {
    /// rows x (cols + 1); last column is the right-hand side
    a: Vec<Vec<Q>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize, obj: &mut [Q]) {
        let inv = self.a[r][c].recip();
        for x in self.a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = self.a[r].clone();
        for (i, row) in self.a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = &*x - &f * y;
                }
            }
        }
        if !obj[c].is_zero() {
            let f = obj[c].clone();
            for (x, y) in obj.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = &*x - &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes the objective row `obj` (reduced costs, last entry holds
    /// minus the current value). Columns `>= allowed` never enter.
    /// Returns false when unbounded.
    fn run(&mut self, obj: &mut [Q], allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.a.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c, obj),
            }
        }
    }
}

/// Optimizes `objective . x` over `x in Q^n` subject to the constraints.
pub fn solve(n: usize, constraints: &[Constraint], objective: &[Q], sense: Sense) -> LpOutcome {
    let m = constraints.len();
    let slack_count = constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    // columns: x+ (n), x- (n), slacks, artificials (m)
    let structural = 2 * n + slack_count;
    let cols = structural + m;
    let mut a = Vec::with_capacity(m);
    let mut slack = 2 * n;
    for (i, con) in constraints.iter().enumerate() {
        assert_eq!(con.coeffs.len(), n, "constraint width");
        let mut row = vec![Q::zero(); cols + 1];
        for (j, c) in con.coeffs.iter().enumerate() {
            row[j] = c.clone();
            row[n + j] = -c;
        }
        match con.relation {
            Relation::Ge => {
                row[slack] = -Q::one();
                slack += 1;
            }
            Relation::Le => {
                row[slack] = Q::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        row[cols] = con.rhs.clone();
        if row[cols].is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
        row[structural + i] = Q::one();
        a.push(row);
    }
    let mut t = Tableau { a, basis: (structural..cols).collect(), cols };

    // phase 1: minimize the sum of artificials
    let mut obj = vec![Q::zero(); cols + 1];
    for row in &t.a {
        for (j, x) in row.iter().enumerate() {
            if j < structural || j == cols {
                obj[j] = &obj[j] - x;
            }
        }
    }
    t.run(&mut obj, structural);
    if !obj[cols].is_zero() {
        return LpOutcome::Infeasible;
    }
    // drive remaining artificials out of the basis
    let mut r = 0;
    while r < t.a.len() {
        if t.basis[r] >= structural {
            match (0..structural).find(|&j| !t.a[r][j].is_zero()) {
                Some(c) => {
                    let mut dummy = vec![Q::zero(); cols + 1];
                    t.pivot(r, c, &mut dummy);
                }
                None => {
                    t.a.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // phase 2
    let mut obj = vec![Q::zero(); cols + 1];
    for (j, c) in objective.iter().enumerate() {
        let c = if sense == Sense::Maximize { -c } else { c.clone() };
        obj[n + j] = -&c;
        obj[j] = c;
    }
    for (i, &b) in t.basis.iter().enumerate() {
        if !obj[b].is_zero() {
            let f = obj[b].clone();
            for (x, y) in obj.iter_mut().zip(&t.a[i]) {
                *x = &*x - &f * y;
            }
        }
    }
    if !t.run(&mut obj, structural) {
        return LpOutcome::Unbounded;
    }
    let mut z = vec![Q::zero(); cols];
    for (i, &b) in t.basis.iter().enumerate() {
        z[b] = t.a[i][cols].clone();
    }
    let point: Vec<Q> = (0..n).map(|j| &z[j] - &z[n + j]).collect();
    let value: Q = objective.iter().zip(&point).map(|(c, x)| c * x).sum();
    LpOutcome::Optimal { value, point }
}

/// Result of a mixed strict/weak feasibility test.
#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    Feasible { witness: Vec<Q>, slack: Q },
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible { .. })
    }

    pub fn witness(&self) -> Option<&[Q]> {
        match self {
            Feasibility::Feasible { witness, .. } => Some(witness),
            Feasibility::Infeasible => None,
        }
    }
}

/// Decides whether the weak constraints together with the strict ones
/// (`Ge` read as `>`, `Le` as `<`) have a common solution, by maximizing a
/// common slack `eps <= 1` added to every strict constraint.
pub fn strict_feasibility(n: usize, weak: &[Constraint], strict: &[Constraint]) -> Feasibility {
    let mut cons: Vec<Constraint> = Vec::with_capacity(weak.len() + strict.len() + 1);
    for c in weak {
        let mut coeffs = c.coeffs.clone();
        coeffs.push(Q::zero());
        cons.push(Constraint::new(coeffs, c.relation, c.rhs.clone()));
    }
    for c in strict {
        let mut coeffs = c.coeffs.clone();
        let eps = match c.relation {
            Relation::Ge => -Q::one(),
            Relation::Le => Q::one(),
            Relation::Eq => panic!("strict equality is meaningless"),
        };
        coeffs.push(eps);
        cons.push(Constraint::new(coeffs, c.relation, c.rhs.clone()));
    }
    let mut cap = vec![Q::zero(); n + 1];
    cap[n] = Q::one();
    cons.push(Constraint::new(cap.clone(), Relation::Le, Q::one()));
    match solve(n + 1, &cons, &cap, Sense::Maximize) {
        LpOutcome::Optimal { value, mut point } if value.is_positive() => {
            point.pop();
            Feasibility::Feasible { witness: point, slack: value }
        }
        _ => Feasibility::Infeasible,
    }
}
