//! Root data: the cocharacter lattice `Λ = Z^rank`, the character lattice
//! `Λ*`, simple roots (in `Λ*`) and simple coroots (in `Λ`), positive roots by
//! reflection closure, and the Weyl group action.
//!
//! Naming follows the slice literature: elements of `Λ*` that are roots are
//! written `α∨` and live in [`RootChar`]; the simple coroots `α_i` live in
//! [`Coweight`] and are the simple roots of the Langlands dual group.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Basis, RatMatrix, Rational};

macro_rules! lattice_vector {
    ($name:ident) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = vec![0; rank];
                v[i] = 1;
                $name(v)
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn scaled(&self, k: i64) -> Self {
                $name(self.0.iter().map(|x| k * x).collect())
            }

            /// `self + k * other`
            pub fn add_scaled(&self, k: i64, other: &Self) -> Self {
                debug_assert_eq!(self.rank(), other.rank());
                $name(
                    self.0
                        .iter()
                        .zip(&other.0)
                        .map(|(a, b)| a + k * b)
                        .collect(),
                )
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: Self) -> $name {
                self.add_scaled(1, rhs)
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: Self) -> $name {
                self.add_scaled(-1, rhs)
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                self.scaled(-1)
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    };
}

lattice_vector!(Coweight);
lattice_vector!(RootChar);

impl RootChar {
    /// The pairing `⟨β∨, μ⟩` between `Λ*` and `Λ`.
    pub fn pair(&self, mu: &Coweight) -> i64 {
        assert_eq!(self.rank(), mu.rank(), "pairing of mismatched ranks");
        self.0.iter().zip(&mu.0).map(|(a, b)| a * b).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleType {
    fn letter(self) -> char {
        match self {
            SimpleType::A => 'A',
            SimpleType::B => 'B',
            SimpleType::C => 'C',
            SimpleType::D => 'D',
            SimpleType::E => 'E',
            SimpleType::F => 'F',
            SimpleType::G => 'G',
        }
    }

    fn rank_ok(self, rank: usize) -> bool {
        match self {
            SimpleType::A => rank >= 1,
            SimpleType::B | SimpleType::C => rank >= 2,
            SimpleType::D => rank >= 3,
            SimpleType::E => (6..=8).contains(&rank),
            SimpleType::F => rank == 4,
            SimpleType::G => rank == 2,
        }
    }
}

/// Which root datum to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupSpec {
    /// `GL_n` with `Λ = Z^n`.
    GL(usize),
    /// A simple type with `Λ` the full coweight lattice.
    Simple(SimpleType, usize),
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::BadDescriptor(s.to_string());
        if let Some(n) = t.strip_prefix("GL").or_else(|| t.strip_prefix("gl")) {
            let n: usize = n.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(Error::RankOutOfRange {
                    kind: "GL".into(),
                    rank: 0,
                });
            }
            return Ok(GroupSpec::GL(n));
        }
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        if !letter.is_ascii_alphabetic() {
            return Err(bad());
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        let kind = match letter.to_ascii_uppercase() {
            'A' => SimpleType::A,
            'B' => SimpleType::B,
            'C' => SimpleType::C,
            'D' => SimpleType::D,
            'E' => SimpleType::E,
            'F' => SimpleType::F,
            'G' => SimpleType::G,
            _ => return Err(Error::UnknownType(letter.to_string())),
        };
        if !kind.rank_ok(rank) {
            return Err(Error::RankOutOfRange {
                kind: kind.letter().to_string(),
                rank,
            });
        }
        Ok(GroupSpec::Simple(kind, rank))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::GL(n) => write!(f, "GL{n}"),
            GroupSpec::Simple(t, r) => write!(f, "{}{r}", t.letter()),
        }
    }
}

/// `C[i][j] = ⟨α∨_i, α_j⟩ = 2(α_i, α_j)/(α_i, α_i)` where the `α_i` are the
/// simple roots of the named type (Bourbaki numbering).
fn cartan_matrix(kind: SimpleType, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match kind {
        SimpleType::A | SimpleType::B | SimpleType::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        SimpleType::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        SimpleType::E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        SimpleType::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        SimpleType::G => link(0, 1),
    }
    match kind {
        // alpha_n short
        SimpleType::B => c[n - 1][n - 2] = -2,
        // alpha_n long
        SimpleType::C => c[n - 2][n - 1] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        SimpleType::F => c[2][1] = -2,
        // alpha_1 short
        SimpleType::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Positive rationals `d_i` with `d_i C[i][j] = d_j C[j][i]`, normalized so
/// the smallest is 1. For a simple type `d_i = (α_i, α_i)/2`.
pub(crate) fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<Rational> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::from_integer(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..n {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    d[j] = Some(di * Rational::new(cartan[i][j], cartan[j][i]));
                    queue.push_back(j);
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
    let min = d.iter().copied().min().unwrap_or(Rational::from_integer(1));
    d.into_iter().map(|x| x / min).collect()
}

/// A reductive root datum with all derived data precomputed.
#[derive(Debug, Clone)]
pub struct RootDatum {
    pub label: String,
    pub spec: GroupSpec,
    pub rank: usize,
    pub ss_rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<RootChar>,
    pub simple_coroots: Vec<Coweight>,
    /// Positive roots in `Λ*`, sorted lexicographically; `positive_coroots[k]`
    /// is the coroot of `positive_roots[k]`.
    pub positive_roots: Vec<RootChar>,
    pub positive_coroots: Vec<Coweight>,
    pub two_rho_check: RootChar,
    pub two_rho: Coweight,
    fundamentals: Vec<Coweight>,
    form: RatMatrix,
    coroot_basis: Basis,
    root_basis: Basis,
}

impl RootDatum {
    pub fn new(spec: GroupSpec) -> Self {
        match spec {
            GroupSpec::GL(n) => Self::gl(n),
            GroupSpec::Simple(kind, r) => Self::simple(kind, r),
        }
    }

    /// Parses a descriptor such as `GL3`, `A2`, `G2`.
    pub fn parse(descriptor: &str) -> Result<Self> {
        Ok(Self::new(descriptor.parse()?))
    }

    fn gl(n: usize) -> Self {
        let simple_roots: Vec<RootChar> = (0..n.saturating_sub(1))
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v[i + 1] = -1;
                RootChar(v)
            })
            .collect();
        let simple_coroots: Vec<Coweight> =
            simple_roots.iter().map(|r| Coweight(r.0.clone())).collect();
        let fundamentals = (1..=n)
            .map(|k| Coweight((0..n).map(|i| i64::from(i < k)).collect()))
            .collect();
        let form = linalg::to_rational(
            &(0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect::<Vec<_>>(),
        );
        Self::assemble(
            format!("GL{n}"),
            GroupSpec::GL(n),
            n,
            simple_roots,
            simple_coroots,
            fundamentals,
            form,
        )
    }

    fn simple(kind: SimpleType, n: usize) -> Self {
        let cartan = cartan_matrix(kind, n);
        let simple_roots = (0..n).map(|i| RootChar::unit(n, i)).collect();
        let simple_coroots = (0..n)
            .map(|j| Coweight((0..n).map(|i| cartan[i][j]).collect()))
            .collect();
        let fundamentals = (0..n).map(|i| Coweight::unit(n, i)).collect();
        // (x, y) = x^T C^{-T} D y, so that (α_i, x) = d_i ⟨α∨_i, x⟩.
        let d = symmetrizer(&cartan);
        let ct = linalg::transpose(&linalg::to_rational(&cartan), n);
        let cti = linalg::invert(&ct).expect("Cartan matrix of finite type is invertible");
        let form = cti
            .iter()
            .map(|row| row.iter().zip(&d).map(|(&x, &dj)| x * dj).collect())
            .collect();
        Self::assemble(
            format!("{}{n}", kind.letter()),
            GroupSpec::Simple(kind, n),
            n,
            simple_roots,
            simple_coroots,
            fundamentals,
            form,
        )
    }

    fn assemble(
        label: String,
        spec: GroupSpec,
        rank: usize,
        simple_roots: Vec<RootChar>,
        simple_coroots: Vec<Coweight>,
        fundamentals: Vec<Coweight>,
        form: RatMatrix,
    ) -> Self {
        let ss_rank = simple_roots.len();
        let cartan: Vec<Vec<i64>> = simple_roots
            .iter()
            .map(|r| simple_coroots.iter().map(|c| r.pair(c)).collect())
            .collect();
        let root_basis = Basis::new(simple_roots.iter().map(|r| r.0.clone()).collect(), rank);
        let coroot_basis = Basis::new(simple_coroots.iter().map(|c| c.0.clone()).collect(), rank);

        // Reflection closure on (root, coroot) pairs.
        let mut seen: HashMap<RootChar, Coweight> = HashMap::new();
        let mut queue: VecDeque<(RootChar, Coweight)> = VecDeque::new();
        for (r, c) in simple_roots.iter().zip(&simple_coroots) {
            if seen.insert(r.clone(), c.clone()).is_none() {
                queue.push_back((r.clone(), c.clone()));
            }
        }
        while let Some((beta, b)) = queue.pop_front() {
            for (ar, ac) in simple_roots.iter().zip(&simple_coroots) {
                let beta2 = beta.add_scaled(-beta.pair(ac), ar);
                let b2 = b.add_scaled(-ar.pair(&b), ac);
                if !seen.contains_key(&beta2) {
                    seen.insert(beta2.clone(), b2.clone());
                    queue.push_back((beta2, b2));
                }
            }
        }
        let mut positive: Vec<(RootChar, Coweight)> = seen
            .into_iter()
            .filter(|(r, _)| {
                let c = root_basis
                    .integer_coords(&r.0)
                    .expect("roots lie in the root lattice");
                c.iter().all(|&x| x >= 0)
            })
            .collect();
        positive.sort();
        let (positive_roots, positive_coroots): (Vec<_>, Vec<_>) = positive.into_iter().unzip();
        let two_rho_check = positive_roots
            .iter()
            .fold(RootChar::zero(rank), |acc, r| &acc + r);
        let two_rho = positive_coroots
            .iter()
            .fold(Coweight::zero(rank), |acc, c| &acc + c);

        RootDatum {
            label,
            spec,
            rank,
            ss_rank,
            cartan,
            simple_roots,
            simple_coroots,
            positive_roots,
            positive_coroots,
            two_rho_check,
            two_rho,
            fundamentals,
            form,
            coroot_basis,
            root_basis,
        }
    }

    /// Validates the length of a coordinate vector.
    pub fn coweight(&self, coords: Vec<i64>) -> Result<Coweight> {
        if coords.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: coords.len(),
            });
        }
        Ok(Coweight(coords))
    }

    /// Fundamental coweights. For simple types these are the basis vectors of
    /// `Λ`; for `GL_n` they are `e_1 + ... + e_k`, `k = 1..=n`.
    pub fn fundamental_coweights(&self) -> &[Coweight] {
        &self.fundamentals
    }

    pub fn fundamental(&self, i: usize) -> Option<&Coweight> {
        i.checked_sub(1).and_then(|k| self.fundamentals.get(k))
    }

    /// Parses `1,0,-1`, `w1`, `2w1+w2` style coweight literals.
    pub fn parse_coweight(&self, input: &str) -> Result<Coweight> {
        let bad = |reason: &str| Error::BadCoweight {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim();
        if s.is_empty() {
            return Err(bad("empty literal"));
        }
        if s.contains('w') {
            let mut acc = Coweight::zero(self.rank);
            for term in s.split('+') {
                let term = term.trim();
                let (mult, idx) = term.split_once('w').ok_or_else(|| bad("expected w<i>"))?;
                let mult = mult.trim_end_matches('*');
                let k: i64 = match mult {
                    "" => 1,
                    "-" => -1,
                    m => m.parse().map_err(|_| bad("bad multiplier"))?,
                };
                let i: usize = idx.parse().map_err(|_| bad("bad fundamental index"))?;
                let w = self
                    .fundamental(i)
                    .ok_or_else(|| bad("fundamental index out of range"))?;
                acc = acc.add_scaled(k, w);
            }
            return Ok(acc);
        }
        let coords = s
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("expected comma-separated integers"))?;
        self.coweight(coords)
            .map_err(|_| bad(&format!("expected {} coordinates", self.rank)))
    }

    pub fn pairing(&self, beta: &RootChar, mu: &Coweight) -> i64 {
        beta.pair(mu)
    }

    pub fn is_dominant(&self, mu: &Coweight) -> bool {
        self.simple_roots.iter().all(|a| a.pair(mu) >= 0)
    }

    /// Coefficients `n` with `λ - μ = Σ n_i α_i`, if `λ - μ` lies in the
    /// coroot lattice. The coefficients may be negative.
    pub fn coroot_coefficients(&self, mu: &Coweight, lambda: &Coweight) -> Option<Vec<i64>> {
        self.coroot_basis.integer_coords(&(lambda - mu).0)
    }

    /// `μ ≤ λ` in the dominance order.
    pub fn dominance_leq(&self, mu: &Coweight, lambda: &Coweight) -> bool {
        self.coroot_coefficients(mu, lambda)
            .is_some_and(|n| n.iter().all(|&x| x >= 0))
    }

    /// Coordinates of a character in the basis of simple roots, if it lies in
    /// the root lattice.
    pub fn simple_root_coords(&self, beta: &RootChar) -> Option<Vec<i64>> {
        self.root_basis.integer_coords(&beta.0)
    }

    /// `s_i(μ) = μ - ⟨α∨_i, μ⟩ α_i` (0-based `i`).
    pub fn reflect(&self, i: usize, mu: &Coweight) -> Coweight {
        mu.add_scaled(-self.simple_roots[i].pair(mu), &self.simple_coroots[i])
    }

    /// `s_i(β∨) = β∨ - ⟨β∨, α_i⟩ α∨_i` (0-based `i`).
    pub fn reflect_char(&self, i: usize, beta: &RootChar) -> RootChar {
        beta.add_scaled(-beta.pair(&self.simple_coroots[i]), &self.simple_roots[i])
    }

    pub fn dominant_representative(&self, mu: &Coweight) -> Coweight {
        let mut cur = mu.clone();
        while let Some(i) = self.simple_roots.iter().position(|a| a.pair(&cur) < 0) {
            cur = self.reflect(i, &cur);
        }
        cur
    }

    /// The unique antidominant element of `Wμ` (the lowest weight when `μ` is
    /// a highest weight).
    pub fn antidominant_representative(&self, mu: &Coweight) -> Coweight {
        -&self.dominant_representative(&-mu)
    }

    /// The Weyl orbit of `λ`, sorted lexicographically.
    pub fn weyl_orbit(&self, lambda: &Coweight) -> Vec<Coweight> {
        let mut seen: HashSet<Coweight> = HashSet::from([lambda.clone()]);
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(mu) = queue.pop_front() {
            for i in 0..self.ss_rank {
                let nu = self.reflect(i, &mu);
                if seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
        seen.into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// `|W|`, as the orbit size of the regular element `2ρ`.
    pub fn weyl_group_order(&self) -> usize {
        self.weyl_orbit(&self.two_rho).len()
    }

    /// The W-invariant symmetric form on `Λ ⊗ Q`, as a rational matrix in the
    /// lattice basis.
    pub(crate) fn form(&self) -> &RatMatrix {
        &self.form
    }

    pub fn pairing_with_two_rho_check(&self, mu: &Coweight) -> i64 {
        self.two_rho_check.pair(mu)
    }

    /// `⟨ρ∨, μ⟩` for `μ` in the coroot lattice; panics on odd `⟨2ρ∨, μ⟩`.
    pub fn pairing_with_rho_check(&self, mu: &Coweight) -> i64 {
        let twice = self.two_rho_check.pair(mu);
        assert!(twice % 2 == 0, "⟨2ρ∨, {mu}⟩ = {twice} is odd");
        twice / 2
    }
}
