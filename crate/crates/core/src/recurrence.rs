//! Integer linear recurrences `U_n = a₁U_{n−1} + ⋯ + a_kU_{n−k}`.
//!
//! Besides term generation this module produces an exact Binet form and the
//! hypothesis classifier. For every irreducible factor `g` of the
//! characteristic polynomial `f`, the Binet coefficient of each root `α` of `g`
//! is `e_g(α)` for one polynomial `e_g = H·f'⁻¹ mod g`, where
//! `H(y) = Σ_{j<k} U_j Σ_{m=j+1}^{k} c_m y^{m−j−1}` and `c_m` are the coefficients
//! of `f`. The contribution of all roots of `g` to `U_n` is then the trace
//! `Tr(e_g·xⁿ mod g)`, a rational number computed from power sums.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebraic::{
    factor, is_excluded_binary, is_root_of_unity, mult_dependent, degeneracy_order, roots_of,
    AlgebraicNumber, Dependence, QuadraticElem,
};
use crate::error::{domain, Error, Result};
use crate::poly::{IntPoly, RatPoly};

/// Default bound `R` for the multiplicative-independence search.
pub const DEFAULT_INDEPENDENCE_BOUND: u32 = 50;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearRecurrence {
    coeffs: Vec<BigInt>,
    init: Vec<BigInt>,
}

impl LinearRecurrence {
    /// `coeffs = [a₁, …, a_k]`, `init = [U₀, …, U_{k−1}]`.
    pub fn new(coeffs: Vec<BigInt>, init: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(domain("recurrence order must be at least 1"));
        }
        if coeffs.len() != init.len() {
            return Err(domain(format!(
                "order {} needs {} initial terms, got {}",
                coeffs.len(),
                coeffs.len(),
                init.len()
            )));
        }
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(domain("last recurrence coefficient a_k must be nonzero"));
        }
        if init.iter().all(Zero::is_zero) {
            return Err(domain("initial terms are all zero"));
        }
        Ok(Self { coeffs, init })
    }

    pub fn from_i64(coeffs: &[i64], init: &[i64]) -> Result<Self> {
        Self::new(
            coeffs.iter().map(|&c| c.into()).collect(),
            init.iter().map(|&c| c.into()).collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn init(&self) -> &[BigInt] {
        &self.init
    }

    /// `x^k − a₁x^{k−1} − ⋯ − a_k`
    pub fn char_poly(&self) -> IntPoly {
        let mut c: Vec<BigInt> = self.coeffs.iter().rev().map(|a| -a).collect();
        c.push(BigInt::one());
        IntPoly::new(c)
    }

    pub fn iter(&self) -> Terms<'_> {
        Terms {
            rec: self,
            window: self.init.clone(),
            pos: 0,
        }
    }

    pub fn term(&self, n: usize) -> BigInt {
        self.iter().nth(n).expect("the term stream is infinite")
    }

    /// `U₀, …, U_N`
    pub fn terms(&self, last: usize) -> Vec<BigInt> {
        self.iter().take(last + 1).collect()
    }

    /// The recurrence whose characteristic polynomial is `poly` (monic) and
    /// whose initial terms are the first terms of `self`.
    pub fn with_char_poly(&self, poly: &IntPoly) -> Result<Self> {
        if !poly.is_monic() || poly.degree() == 0 {
            return Err(domain("characteristic polynomial must be monic of positive degree"));
        }
        let k = poly.degree();
        let coeffs = (1..=k).map(|m| -poly.coeff(k - m)).collect();
        Self::new(coeffs, self.terms(k - 1))
    }
}

/// Streaming iterator over `U₀, U₁, …`.
pub struct Terms<'a> {
    rec: &'a LinearRecurrence,
    window: Vec<BigInt>,
    pos: usize,
}

impl Iterator for Terms<'_> {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let k = self.window.len();
        let out = self.window[self.pos % k].clone();
        // Slot pos % k holds U_pos; overwrite it with U_{pos+k}.
        let mut next = BigInt::zero();
        for (m, a) in self.rec.coeffs.iter().enumerate() {
            next += a * &self.window[(self.pos + k - 1 - m) % k];
        }
        self.window[self.pos % k] = next;
        self.pos += 1;
        Some(out)
    }
}

impl fmt::Display for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "order {}; coeffs {}; init {}",
            self.order(),
            join(&self.coeffs),
            join(&self.init)
        )
    }
}

fn parse_list(s: &str) -> Result<Vec<BigInt>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| BigInt::from_str(x).map_err(|_| domain(format!("not an integer: {x:?}"))))
        .collect()
}

impl FromStr for LinearRecurrence {
    type Err = Error;

    /// Accepts `order k; coeffs a1,...,ak; init U0,...` (keywords optional,
    /// so `k;a1,..;U0,..` works too).
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(';').map(str::trim).filter(|p| !p.is_empty()).collect();
        if parts.len() != 3 {
            return Err(domain("recurrence needs three ';'-separated fields: order, coeffs, init"));
        }
        let field = |p: &str, key: &str| -> String {
            p.strip_prefix(key).map_or_else(|| p.to_string(), |r| r.trim().to_string())
        };
        let order: usize = field(parts[0], "order")
            .parse()
            .map_err(|_| domain(format!("bad order {:?}", parts[0])))?;
        let coeffs = parse_list(&field(parts[1], "coeffs"))?;
        let init = parse_list(&field(parts[2], "init"))?;
        if coeffs.len() != order {
            return Err(domain(format!("order {order} but {} coefficients", coeffs.len())));
        }
        Self::new(coeffs, init)
    }
}

/// Power sums `p_j = Σ αʲ`, `j < deg g`, over the roots of a monic `g`.
fn power_sums(g: &IntPoly) -> Vec<BigInt> {
    let m = g.degree();
    let mut p = vec![BigInt::from(m)];
    for j in 1..m {
        let mut s = BigInt::from(j) * g.coeff(m - j);
        for i in 1..j {
            s += g.coeff(m - i) * &p[j - i];
        }
        p.push(-s);
    }
    p
}

fn trace_mod(h: &RatPoly, sums: &[BigInt]) -> BigRational {
    h.coeffs()
        .iter()
        .zip(sums)
        .map(|(c, p)| c * BigRational::from_integer(p.clone()))
        .fold(BigRational::zero(), |a, b| a + b)
}

fn eval_at_quadratic(h: &RatPoly, x: &QuadraticElem) -> QuadraticElem {
    let mut acc = QuadraticElem::rational(BigRational::zero(), x.d());
    for c in h.coeffs().iter().rev() {
        acc = acc.mul(x).add(&QuadraticElem::rational(c.clone(), x.d()));
    }
    acc
}

/// Exact value of a Binet coefficient when its root has degree ≤ 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    Rational(BigRational),
    Quadratic(QuadraticElem),
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::Rational(q) => write!(f, "{q}"),
            ClosedForm::Quadratic(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BinetTerm {
    pub root: AlgebraicNumber,
    /// `η = eta_poly(α)`, reduced modulo the minimal polynomial of `α`.
    pub eta_poly: RatPoly,
    /// `(α, η)` in closed form when `α` is rational or quadratic.
    pub closed: Option<(ClosedForm, ClosedForm)>,
}

/// One irreducible factor of the characteristic polynomial together with the
/// Binet coefficient polynomial shared by its roots.
#[derive(Clone, Debug)]
struct FactorPart {
    g: IntPoly,
    eta: RatPoly,
    sums: Vec<BigInt>,
}

#[derive(Clone, Debug)]
pub struct BinetForm {
    pub terms: Vec<BinetTerm>,
    /// Roots whose coefficient vanishes; they are dropped from the form.
    pub dropped: Vec<AlgebraicNumber>,
    parts: Vec<FactorPart>,
}

impl BinetForm {
    /// Characteristic polynomial of the reduced (effective) recurrence.
    pub fn effective_poly(&self) -> IntPoly {
        self.parts.iter().fold(IntPoly::one(), |acc, p| acc.mul(&p.g))
    }

    pub fn effective_order(&self) -> usize {
        self.effective_poly().degree()
    }

    /// `U_n` from the Binet form, exactly.
    pub fn eval(&self, n: u64) -> BigRational {
        let mut total = BigRational::zero();
        for part in &self.parts {
            let m = part.g.to_rat();
            let h = part.eta.mul_mod(&RatPoly::x().pow_mod(n, &m), &m);
            total += trace_mod(&h, &part.sums);
        }
        total
    }
}

/// Exact Binet decomposition of a simple recurrence.
///
/// Roots whose coefficient is zero are removed (with their factor of the
/// characteristic polynomial); the rest of the form still reproduces every
/// term.
pub fn binet_decompose(rec: &LinearRecurrence) -> Result<BinetForm> {
    let f = rec.char_poly();
    if !f.is_squarefree() {
        return Err(Error::NotSimple);
    }
    let k = rec.order();
    let c = f.coeffs();
    let mut h = vec![BigInt::zero(); k];
    for (j, u) in rec.init().iter().enumerate() {
        for m in j + 1..=k {
            h[m - j - 1] += u * &c[m];
        }
    }
    let h = IntPoly::new(h).to_rat();
    let df = f.derivative().to_rat();

    let mut parts = Vec::new();
    let mut dropped_polys = Vec::new();
    for (g, _) in factor(&f)? {
        let gm = g.to_rat();
        let inv = df
            .inverse_mod(&gm)
            .ok_or_else(|| Error::Verification(String::from("f' not invertible modulo a factor")))?;
        let eta = h.mul_mod(&inv, &gm);
        if eta.is_zero() {
            dropped_polys.push(g);
        } else {
            let sums = power_sums(&g);
            parts.push(FactorPart { g, eta, sums });
        }
    }

    let mut terms = Vec::new();
    let mut dropped = Vec::new();
    for (root, _) in roots_of(&f)? {
        if dropped_polys.contains(root.min_poly()) {
            dropped.push(root);
            continue;
        }
        let part = parts
            .iter()
            .find(|p| &p.g == root.min_poly())
            .expect("every root belongs to a factor");
        let closed = if let Some(q) = root.as_rational() {
            Some((ClosedForm::Rational(q.clone()), ClosedForm::Rational(part.eta.eval(&q))))
        } else {
            root.as_quadratic().map(|a| {
                let eta = eval_at_quadratic(&part.eta, &a);
                (ClosedForm::Quadratic(a), ClosedForm::Quadratic(eta))
            })
        };
        terms.push(BinetTerm {
            root,
            eta_poly: part.eta.clone(),
            closed,
        });
    }
    let form = BinetForm { terms, dropped, parts };
    for (n, u) in rec.init().iter().enumerate() {
        if form.eval(n as u64) != BigRational::from_integer(u.clone()) {
            return Err(Error::Verification(format!("Binet form disagrees with U_{n}")));
        }
    }
    Ok(form)
}

/// Hypothesis flags of the finiteness theorem for one sequence and one `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub char_poly: IntPoly,
    pub simple: bool,
    /// Characteristic polynomial after dropping roots with zero coefficient.
    pub effective_poly: IntPoly,
    pub effective_order: usize,
    /// Displayed roots, in the order used by the witness indices below.
    pub roots: Vec<String>,
    pub dropped_roots: Vec<String>,
    pub degenerate: bool,
    /// Order `m` of a root-of-unity ratio when degenerate.
    pub degeneracy_order: Option<u64>,
    /// `(root index, order)` for every root that is a root of unity.
    pub roots_of_unity: Vec<(usize, u64)>,
    pub has_root_of_unity_root: bool,
    pub independence_bound: u32,
    /// Pairwise independence among roots that are not roots of unity, up to the bound.
    pub pairwise_independent: bool,
    /// `(i, j, r, s)` with `α_i^r = α_j^s`.
    pub dependence_witness: Option<(usize, usize, i64, i64)>,
    pub d: BigInt,
    pub excluded_binary_form: bool,
    /// Advisory: some quadratic factor is `x² + ax ± 1` with `(a² ∓ 4)/d` a square.
    pub quadratic_unit_factor: bool,
    pub theorem_applies: bool,
    pub warnings: Vec<String>,
}

/// Classifies `rec` against the theorem's hypotheses for the given `d`.
///
/// Roots with a vanishing Binet coefficient are dropped first. Non-simple
/// sequences are reported with `simple = false` and the remaining flags are
/// computed on the square-free part of the characteristic polynomial.
pub fn classify(rec: &LinearRecurrence, d: &BigInt, bound: u32) -> Result<Classification> {
    let char_poly = rec.char_poly();
    let mut warnings = Vec::new();
    let (simple, effective_poly, dropped_roots) = match binet_decompose(rec) {
        Ok(form) => {
            let dropped: Vec<String> = form.dropped.iter().map(ToString::to_string).collect();
            if !dropped.is_empty() {
                warnings.push(format!(
                    "Binet coefficient vanishes at {}; effective order reduced from {} to {}",
                    dropped.join(", "),
                    rec.order(),
                    form.effective_order()
                ));
            }
            (true, form.effective_poly(), dropped)
        }
        Err(Error::NotSimple) => {
            warnings.push(String::from("characteristic polynomial has a repeated root"));
            (false, char_poly.squarefree_part(), Vec::new())
        }
        Err(e) => return Err(e),
    };
    let roots: Vec<AlgebraicNumber> = roots_of(&effective_poly)?.into_iter().map(|r| r.0).collect();

    let degeneracy = degeneracy_order(&effective_poly)?;
    let mut roots_of_unity = Vec::new();
    for (i, r) in roots.iter().enumerate() {
        if let Some(n) = is_root_of_unity(r)? {
            roots_of_unity.push((i, n));
        }
    }
    let mut witness = None;
    'pairs: for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if roots_of_unity.iter().any(|&(x, _)| x == i || x == j) {
                continue;
            }
            if let Dependence::Dependent { r, s } = mult_dependent(&roots[i], &roots[j], bound)? {
                witness = Some((i, j, r, s));
                break 'pairs;
            }
        }
    }
    let excluded = is_excluded_binary(&effective_poly, d);
    let quadratic_unit_factor = factor(&effective_poly)?
        .iter()
        .any(|(g, _)| is_excluded_binary(g, d));
    let has_rou = !roots_of_unity.is_empty();
    let degenerate = degeneracy.is_some();
    let pairwise_independent = witness.is_none();
    Ok(Classification {
        char_poly,
        simple,
        effective_order: effective_poly.degree(),
        effective_poly,
        roots: roots.iter().map(ToString::to_string).collect(),
        dropped_roots,
        degenerate,
        degeneracy_order: degeneracy,
        roots_of_unity,
        has_root_of_unity_root: has_rou,
        independence_bound: bound,
        pairwise_independent,
        dependence_witness: witness,
        d: d.clone(),
        excluded_binary_form: excluded,
        quadratic_unit_factor,
        theorem_applies: simple && !degenerate && !has_rou && pairwise_independent && !excluded,
        warnings,
    })
}
