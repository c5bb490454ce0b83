//! Marked two-parabolic groups `G = <S, T>` with
//! `S = [[1, 0], [1, 1]]` and `T = [[1, 2 lambda], [0, 1]]`.
//!
//! Words use `S, s, T, t` with lower case for inverses. Matrices built from
//! words carry the word as label.
//!
//! The parabolic tower `P_0 = T`, `P_i = P_{i-1} S P_{i-1}^{-1}` satisfies
//! `<S, P_k> = A <S, T_{f^k(lambda)}> A^{-1}` with `f(z) = -2 z^2`, so a word
//! witnessing something at `f^k(lambda)` lifts to `G` by `T -> P_k`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::moebius::{word, ComplexValue, MoebiusMatrix, SpherePoint};

/// Default cap on the tower index; word length grows like `2^(i+1)`.
pub const DEFAULT_TOWER_DEPTH_CAP: u32 = 16;

/// Tolerance for matrix identities with floating entries.
pub const MATRIX_TOL: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct MarkedGroup {
    lambda: ComplexValue,
    s: MoebiusMatrix,
    t: MoebiusMatrix,
}

pub fn make_group(lambda: ComplexValue) -> Result<MarkedGroup> {
    MarkedGroup::new(lambda)
}

/// `T_mu = [[1, 2 mu], [0, 1]]`.
pub fn t_matrix(mu: &ComplexValue) -> MoebiusMatrix {
    MoebiusMatrix::new(ComplexValue::one(), &ComplexValue::int(2, 0) * mu, ComplexValue::zero(), ComplexValue::one())
}

pub fn s_matrix() -> MoebiusMatrix {
    MoebiusMatrix::from_ints(1, 0, 1, 1)
}

/// `A = [[1, 0], [-1/(2 lambda), 1]]`, which fixes `S` and sends `P_1` to `T_{f(lambda)}`.
pub fn conjugator(lambda: &ComplexValue) -> Result<MoebiusMatrix> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let c = -(&ComplexValue::one() / &(&ComplexValue::int(2, 0) * lambda));
    Ok(MoebiusMatrix::new(ComplexValue::one(), ComplexValue::zero(), c, ComplexValue::one()))
}

/// Word of the tower element `P_i`.
pub fn tower_word(i: u32) -> String {
    let mut w = String::from("T");
    for _ in 0..i {
        let inv = word::inverse_unchecked(&w);
        w = format!("{}S{}", w, inv);
    }
    w
}

/// Lift a word for `<S, T_{f^k(lambda)}>` to `G` by `T -> P_k`.
pub fn lift_word(w: &str, k: u32) -> Result<String> {
    word::substitute(w, "S", &tower_word(k))
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceIdentity {
    pub name: String,
    pub computed: ComplexValue,
    pub expected: ComplexValue,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceIdentities {
    pub identities: Vec<TraceIdentity>,
}

impl TraceIdentities {
    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|i| i.holds)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LabeledFixedPoint {
    pub element: String,
    pub point: SpherePoint,
}

/// The second commuting pair obtained with the roles of `S` and `T` swapped.
#[derive(Clone, Debug, Serialize)]
pub struct DualPair {
    pub q1: MoebiusMatrix,
    pub q2: MoebiusMatrix,
    pub corner: MoebiusMatrix,
    pub commutes_with_s: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WhiteheadReport {
    pub lambda: ComplexValue,
    /// Words use `S -> S^{-1}` (taken when `Re lambda < 0`).
    pub mirrored: bool,
    pub p1: MoebiusMatrix,
    pub p2: MoebiusMatrix,
    /// `S^{-1} P_2`, or `S P_2` when mirrored.
    pub s_inv_p2: MoebiusMatrix,
    /// `S P_1 S^{-1} P_1^{-1}` (with the same mirroring).
    pub commutator: MoebiusMatrix,
    /// `T` commutes with `s_inv_p2`.
    pub commutes: bool,
    pub dual: DualPair,
    pub fixed_points: Vec<LabeledFixedPoint>,
    /// The Fuchsian conjugacy of the subgroups is not checked here.
    pub conjugacy_checked: bool,
}

impl MarkedGroup {
    pub fn new(lambda: ComplexValue) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        let t = t_matrix(&lambda).with_label("T");
        Ok(MarkedGroup { lambda, s: s_matrix().with_label("S"), t })
    }

    pub fn lambda(&self) -> &ComplexValue {
        &self.lambda
    }

    pub fn s(&self) -> &MoebiusMatrix {
        &self.s
    }

    pub fn t(&self) -> &MoebiusMatrix {
        &self.t
    }

    pub fn is_exact(&self) -> bool {
        self.lambda.is_exact()
    }

    fn tol(&self) -> f64 {
        if self.is_exact() {
            0.0
        } else {
            MATRIX_TOL * (1.0 + self.lambda.abs_f64()).powi(4)
        }
    }

    fn letter(&self, c: char) -> MoebiusMatrix {
        match c {
            'S' => self.s.clone(),
            's' => self.s.inverse(),
            'T' => self.t.clone(),
            _ => self.t.inverse(),
        }
    }

    /// Matrix of a word, labelled by the word.
    pub fn evaluate_word(&self, w: &str) -> Result<MoebiusMatrix> {
        word::validate(w)?;
        let mut m = MoebiusMatrix::identity();
        for c in w.chars() {
            m = m.compose(&self.letter(c));
        }
        Ok(m)
    }

    /// The three trace identities `Tr[S,T] - 2 = 4 lambda^2`,
    /// `Tr ST = 2 + 2 lambda`, `Tr ST^{-1} = 2 - 2 lambda`.
    pub fn trace_identities(&self) -> TraceIdentities {
        let l = &self.lambda;
        let two = ComplexValue::int(2, 0);
        let comm = MoebiusMatrix::commutator(&self.s, &self.t);
        let st = self.s.compose(&self.t);
        let sti = self.s.compose(&self.t.inverse());
        let rows = vec![
            ("Tr[S,T] - 2", &comm.trace() - &two, &ComplexValue::int(4, 0) * &l.square()),
            ("Tr ST", st.trace(), &two + &(&two * l)),
            ("Tr ST^-1", sti.trace(), &two - &(&two * l)),
        ];
        let tol = self.tol();
        TraceIdentities {
            identities: rows
                .into_iter()
                .map(|(name, computed, expected)| TraceIdentity {
                    name: name.to_string(),
                    holds: computed.approx_eq(&expected, tol),
                    computed,
                    expected,
                })
                .collect(),
        }
    }

    /// `P_i` with the default depth cap.
    pub fn parabolic_tower(&self, i: u32) -> Result<MoebiusMatrix> {
        self.parabolic_tower_capped(i, DEFAULT_TOWER_DEPTH_CAP)
    }

    pub fn parabolic_tower_capped(&self, i: u32, cap: u32) -> Result<MoebiusMatrix> {
        if i > cap {
            return Err(Error::DepthExceeded { requested: i, cap });
        }
        let mut p = self.t.clone();
        for _ in 0..i {
            p = p.compose(&self.s).compose(&p.inverse());
        }
        Ok(p)
    }

    /// Words and commuting pairs at a Whitehead-type parameter.
    ///
    /// At `lambda = (1 +- i)/2` the element `S^{-1} P_2` is parabolic and
    /// commutes with `T`; for `Re lambda < 0` the words are mirrored by
    /// `S -> S^{-1}`. The computation is done for any `lambda`.
    pub fn whitehead_analysis(&self) -> WhiteheadReport {
        let mirrored = self.lambda.re().sign_tol(0.0).is_lt();
        let m = |w: &str| if mirrored { word::mirror_s(w) } else { w.to_string() };
        let ev = |w: &str| self.evaluate_word(&m(w)).expect("fixed words are valid");
        let p1 = ev("TSt");
        let p2 = ev("TStSTst");
        let s_inv_p2 = ev("sTStSTst");
        let commutator = ev("STStsTst");
        let tol = self.tol();
        let commutes = self.t.commutes_with(&s_inv_p2, tol);
        let q1 = ev("STs");
        let q2 = ev("STsTSts");
        let corner = ev("tSTsTSts");
        let dual = DualPair { commutes_with_s: self.s.commutes_with(&corner, tol), q1, q2, corner };
        let mut fixed_points = Vec::new();
        for el in [&self.t, &self.s, &p1, &p2, &s_inv_p2, &commutator, &dual.corner] {
            if let Ok(pts) = el.fixed_points() {
                for p in pts {
                    fixed_points.push(LabeledFixedPoint { element: el.label.clone().unwrap_or_default(), point: p });
                }
            }
        }
        WhiteheadReport {
            lambda: self.lambda.clone(),
            mirrored,
            p1,
            p2,
            s_inv_p2,
            commutator,
            commutes,
            dual,
            fixed_points,
            conjugacy_checked: false,
        }
    }
}
