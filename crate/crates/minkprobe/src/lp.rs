//! Dense two-phase simplex for the small linear programs used across the
//! crate: Chebyshev centers, bounded-Lipschitz duals, zero-mean projections
//! and min-translate fits.
//!
//! Problems are stated as `min c·x` subject to sparse rows `a·x {≤,=,≥} b`
//! and `x ≥ 0`. Free variables are split by the callers. Pivoting is
//! Dantzig with lowest-index tie-breaks, falling back to Bland's rule after
//! a degenerate streak, so solves are deterministic and terminate.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub objective: f64,
    pub x: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpError {
    Infeasible,
    Unbounded,
    /// Pivot limit hit; callers treat this as a numerical failure.
    Stalled,
}

impl fmt::Display for LpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpError::Infeasible => write!(f, "Infeasible: no point satisfies the constraints"),
            LpError::Unbounded => write!(f, "Unbounded: the objective is unbounded below"),
            LpError::Stalled => write!(f, "Stalled: simplex pivot limit exceeded"),
        }
    }
}

impl std::error::Error for LpError {}

/// `min c·x` over `x ≥ 0` with sparse constraint rows.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<f64>,
    rows: Vec<Row>,
}

#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<(usize, f64)>,
    rel: Relation,
    rhs: f64,
}

const EPS: f64 = 1e-10;
const FEAS_TOL: f64 = 1e-8;
const DEGENERATE_STREAK: usize = 40;
const REFRESH_INTERVAL: usize = 250;

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram { num_vars, objective: vec![0.0; num_vars], rows: Vec::new() }
    }

    pub fn set_objective(&mut self, var: usize, coeff: f64) {
        self.objective[var] = coeff;
    }

    pub fn add_row(&mut self, coeffs: Vec<(usize, f64)>, rel: Relation, rhs: f64) {
        debug_assert!(coeffs.iter().all(|&(j, _)| j < self.num_vars));
        self.rows.push(Row { coeffs, rel, rhs });
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn solve(&self) -> Result<LpSolution, LpError> {
        Tableau::build(self).solve(&self.objective, self.num_vars)
    }
}

struct Tableau {
    /// `m` constraint rows, each of width `ncols + 1` (rhs last).
    rows: Vec<Vec<f64>>,
    /// Pristine copy of the initial rows, for periodic refactorization.
    init_rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    ncols: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let n = lp.num_vars;
        let m = lp.rows.len();
        let num_slack = lp
            .rows
            .iter()
            .filter(|r| matches!(r.rel, Relation::Le | Relation::Ge))
            .count();
        let num_art = lp
            .rows
            .iter()
            .filter(|r| {
                let flipped = r.rhs < 0.0;
                let rel = flip_rel(r.rel, flipped);
                !matches!(rel, Relation::Le)
            })
            .count();
        let first_artificial = n + num_slack;
        let ncols = n + num_slack + num_art;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_slack = n;
        let mut next_art = first_artificial;

        for r in &lp.rows {
            let mut row = vec![0.0; ncols + 1];
            let flip = r.rhs < 0.0;
            let sign = if flip { -1.0 } else { 1.0 };
            for &(j, v) in &r.coeffs {
                row[j] += sign * v;
            }
            row[ncols] = sign * r.rhs;
            match flip_rel(r.rel, flip) {
                Relation::Le => {
                    row[next_slack] = 1.0;
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -1.0;
                    next_slack += 1;
                    row[next_art] = 1.0;
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = 1.0;
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
        }

        let init_rows = rows.clone();
        Tableau { rows, init_rows, basis, ncols, first_artificial }
    }

    fn solve(mut self, objective: &[f64], n: usize) -> Result<LpSolution, LpError> {
        let ncols = self.ncols;
        let has_artificials = ncols > self.first_artificial;

        // Phase-2 cost row is threaded through both phases so reduced costs
        // stay consistent with the basis.
        let mut init_cost = vec![0.0; ncols + 1];
        init_cost[..n].copy_from_slice(objective);
        let mut cost = init_cost.clone();
        self.price_out(&mut cost);

        if has_artificials {
            let mut init_phase1 = vec![0.0; ncols + 1];
            for j in self.first_artificial..ncols {
                init_phase1[j] = 1.0;
            }
            let mut phase1 = init_phase1.clone();
            self.price_out(&mut phase1);
            self.iterate(&mut phase1, &init_phase1, Some((&mut cost, &init_cost)), ncols)?;
            // phase1 stores -objective in the rhs cell
            if -phase1[ncols] > FEAS_TOL {
                return Err(LpError::Infeasible);
            }
            self.evict_artificials(&mut cost);
        }

        // Artificial columns are frozen in phase 2.
        self.refresh(&mut [(&mut cost, init_cost.as_slice())])?;
        let init_cost2 = init_cost.clone();
        self.iterate(&mut cost, &init_cost2, None, self.first_artificial)?;

        let mut x = vec![0.0; n];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rows[r][ncols];
            }
        }
        let objective_value = x.iter().zip(objective).map(|(xi, ci)| xi * ci).sum();
        Ok(LpSolution { objective: objective_value, x })
    }

    /// Recomputes the tableau from the pristine rows and the current basis
    /// (Gauss-Jordan on `[B | A0]`), bounding the roundoff accumulated by
    /// long pivot sequences. Cost rows are rebuilt from their initial forms.
    fn refresh(&mut self, costs: &mut [(&mut Vec<f64>, &[f64])]) -> Result<(), LpError> {
        let m = self.rows.len();
        if m == 0 {
            return Ok(());
        }
        let width = m + self.ncols + 1;
        let mut aug: Vec<Vec<f64>> = (0..m)
            .map(|r| {
                let mut row = Vec::with_capacity(width);
                row.extend((0..m).map(|c| self.init_rows[r][self.basis[c]]));
                row.extend(self.init_rows[r].iter().copied());
                row
            })
            .collect();
        for col in 0..m {
            let piv = (col..m)
                .max_by(|&i, &j| aug[i][col].abs().total_cmp(&aug[j][col].abs()))
                .unwrap();
            if aug[piv][col].abs() < 1e-12 {
                return Err(LpError::Stalled);
            }
            aug.swap(col, piv);
            let inv = 1.0 / aug[col][col];
            for v in aug[col][col..].iter_mut() {
                *v *= inv;
            }
            let pivot_row = std::mem::take(&mut aug[col]);
            for (r, row) in aug.iter_mut().enumerate() {
                if r != col {
                    let f = row[col];
                    if f != 0.0 {
                        for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                            *v -= f * p;
                        }
                    }
                }
            }
            aug[col] = pivot_row;
        }
        for (r, row) in aug.into_iter().enumerate() {
            self.rows[r].copy_from_slice(&row[m..]);
        }
        for (cost, init) in costs.iter_mut() {
            cost.copy_from_slice(init);
            self.price_out(cost);
        }
        Ok(())
    }

    /// Makes the reduced costs of basic columns zero.
    fn price_out(&self, cost: &mut [f64]) {
        for (r, &b) in self.basis.iter().enumerate() {
            let factor = cost[b];
            if factor != 0.0 {
                for (c, v) in cost.iter_mut().zip(&self.rows[r]) {
                    *c -= factor * v;
                }
            }
        }
    }

    fn iterate(
        &mut self,
        cost: &mut Vec<f64>,
        init_cost: &[f64],
        mut secondary: Option<(&mut Vec<f64>, &[f64])>,
        col_limit: usize,
    ) -> Result<(), LpError> {
        let ncols = self.ncols;
        let max_pivots = 2000 + 60 * (self.rows.len() + ncols);
        let mut degenerate_streak = 0usize;
        let mut last_obj = -cost[ncols];

        // `fresh` marks a tableau refactorized since the last pivot; both
        // terminal verdicts (optimal, unbounded) are only accepted on a
        // fresh tableau, so roundoff drift cannot fabricate them.
        let mut fresh = false;
        let mut since_refresh = 0usize;
        for _ in 0..max_pivots {
            if since_refresh >= REFRESH_INTERVAL {
                match &mut secondary {
                    Some((sec, sec_init)) => {
                        self.refresh(&mut [(cost, init_cost), (sec, sec_init)])?
                    }
                    None => self.refresh(&mut [(cost, init_cost)])?,
                }
                fresh = true;
                since_refresh = 0;
            }
            let bland = degenerate_streak >= DEGENERATE_STREAK;
            let entering = match self.pick_entering(cost, col_limit, bland) {
                Some(j) => j,
                None => {
                    if fresh || self.rows.is_empty() {
                        return Ok(());
                    }
                    since_refresh = REFRESH_INTERVAL;
                    continue;
                }
            };
            let leaving = match self.pick_leaving(entering, bland) {
                Some(r) => r,
                None => {
                    if !fresh {
                        since_refresh = REFRESH_INTERVAL;
                        continue;
                    }
                    // Fresh tableau: a column with no positive entries and a
                    // reduced cost at rounding level is numerical debris
                    // (split variables produce exact negated twins), not a
                    // recession ray.
                    if cost[entering] >= -1e-6 {
                        cost[entering] = 0.0;
                        continue;
                    }
                    return Err(LpError::Unbounded);
                }
            };
            self.pivot(leaving, entering, cost, secondary.as_mut().map(|(s, _)| &mut **s));
            fresh = false;
            since_refresh += 1;

            let obj = -cost[ncols];
            if obj < last_obj - EPS {
                degenerate_streak = 0;
            } else {
                degenerate_streak += 1;
            }
            last_obj = obj;
        }
        Err(LpError::Stalled)
    }

    fn pick_entering(&self, cost: &[f64], col_limit: usize, bland: bool) -> Option<usize> {
        if bland {
            (0..col_limit).find(|&j| cost[j] < -EPS)
        } else {
            let mut best = None;
            let mut best_val = -EPS;
            for (j, &c) in cost.iter().enumerate().take(col_limit) {
                if c < best_val {
                    best_val = c;
                    best = Some(j);
                }
            }
            best
        }
    }

    /// Two-pass ratio test: find the minimal ratio, then among rows within
    /// tolerance of it prefer the largest pivot (Bland mode: the smallest
    /// basis index) so the basis stays well conditioned.
    fn pick_leaving(&self, entering: usize, bland: bool) -> Option<usize> {
        let ncols = self.ncols;
        let mut min_ratio = f64::INFINITY;
        for row in &self.rows {
            let a = row[entering];
            if a > EPS {
                min_ratio = min_ratio.min(row[ncols] / a);
            }
        }
        if !min_ratio.is_finite() {
            return None;
        }
        let slack = EPS * (1.0 + min_ratio.abs());
        let mut best: Option<(usize, f64)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            let a = row[entering];
            if a > EPS && row[ncols] / a <= min_ratio + slack {
                let better = match best {
                    None => true,
                    Some((br, ba)) => {
                        if bland {
                            self.basis[r] < self.basis[br]
                        } else {
                            a > ba
                        }
                    }
                };
                if better {
                    best = Some((r, a));
                }
            }
        }
        best.map(|(r, _)| r)
    }

    fn pivot(
        &mut self,
        leaving: usize,
        entering: usize,
        cost: &mut [f64],
        secondary: Option<&mut Vec<f64>>,
    ) {
        let ncols = self.ncols;
        let pivot_val = self.rows[leaving][entering];
        let inv = 1.0 / pivot_val;
        for v in self.rows[leaving].iter_mut() {
            *v *= inv;
        }
        // Exact zero/one on the pivot column keeps later scans clean.
        self.rows[leaving][entering] = 1.0;

        let pivot_row = std::mem::take(&mut self.rows[leaving]);
        for (r, row) in self.rows.iter_mut().enumerate() {
            if r == leaving {
                continue;
            }
            let factor = row[entering];
            if factor != 0.0 {
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= factor * p;
                }
                row[entering] = 0.0;
            }
        }
        for target in [Some(cost), secondary.map(|s| s.as_mut_slice())].into_iter().flatten() {
            let factor = target[entering];
            if factor != 0.0 {
                for (v, p) in target.iter_mut().zip(&pivot_row) {
                    *v -= factor * p;
                }
                target[entering] = 0.0;
            }
        }
        self.rows[leaving] = pivot_row;
        self.basis[leaving] = entering;
        let _ = ncols;
    }

    /// Pivots zero-level artificials out of the basis where possible.
    fn evict_artificials(&mut self, cost: &mut Vec<f64>) {
        for r in 0..self.rows.len() {
            if self.basis[r] < self.first_artificial {
                continue;
            }
            let col = (0..self.first_artificial).find(|&j| self.rows[r][j].abs() > 1e-7);
            if let Some(j) = col {
                self.pivot(r, j, cost, None);
            }
            // No usable pivot: the row is (near-)redundant and stays parked
            // on a zero-level artificial; phase 2 never lets it re-enter.
        }
    }
}

/// Gaussian elimination with partial pivoting for the tiny dense systems
/// used in center recovery and quadratic fits. Consumes its inputs.
pub(crate) fn solve_small(a: &mut [Vec<f64>], b: &mut [f64]) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = a[r][col] / a[col][col];
                if f != 0.0 {
                    for c in col..n {
                        a[r][c] -= f * a[col][c];
                    }
                    b[r] -= f * b[col];
                }
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

fn flip_rel(rel: Relation, flipped: bool) -> Relation {
    if !flipped {
        return rel;
    }
    match rel {
        Relation::Le => Relation::Ge,
        Relation::Ge => Relation::Le,
        Relation::Eq => Relation::Eq,
    }
}
