//! The printed seeds and β coefficients, transcribed as formulas.
//!
//! Formulas use the syntax of [`super::expr`]. Where a printed line break
//! drops the operator between two summands, the summands are joined by `+`.

use crate::family::{BesselKind, FamilyId, HKind};

/// Seeds and β formulas of one linear recurrence
/// `u_{n+1} = Σ_i β_i(n) u_{n−i}` (full-index seeds, `u_0` first).
#[derive(Clone, Copy, Debug)]
pub(crate) struct Linear {
    pub seeds: &'static [&'static str],
    pub betas: &'static [&'static str],
}

/// How a family's printed recurrence is shaped.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Table {
    /// A single linear recurrence.
    Linear(Linear),
    /// `u_{2n+2} = β_0(n)u_{2n} + β_1(n)u_{2n−2} + β_2(n)u_{2n−4}` on the
    /// nonzero-parity subsequence; seeds are full-index `u_0..`.
    Parity(Linear),
    /// Two exponential-type sequences stored as `u_n + sign·v_n`.
    Pair { u: Linear, v: Linear, sign: i64 },
}

macro_rules! d2 {
    () => {
        "((n+1)(2nu+n+1))"
    };
}

macro_rules! d4 {
    () => {
        "((4nu^2-1)(n+1)(n+2)(2nu+n+1)(2nu+n+2))"
    };
}

macro_rules! d14 {
    () => {
        "((4nu^2-1)n(n+1)(2nu+n)(2nu+n+1))"
    };
}

const EXP_J: Linear = Linear {
    seeds: &["1", "p"],
    betas: &[concat!("p(2nu+2n+1)/", d2!()), concat!("-(p^2+1)/", d2!())],
};

const EXP_NEG_J: Linear = Linear {
    seeds: &["1", "-p"],
    betas: &[concat!("-p(2nu+2n+1)/", d2!()), concat!("-(p^2+1)/", d2!())],
};

const EXP_I_J: Linear = Linear {
    seeds: &["1", "i*p"],
    betas: &[concat!("i*p(2nu+2n+1)/", d2!()), concat!("(p^2-1)/", d2!())],
};

const EXP_NEG_I_J: Linear = Linear {
    seeds: &["1", "-i*p"],
    betas: &[concat!("-i*p(2nu+2n+1)/", d2!()), concat!("(p^2-1)/", d2!())],
};

const EXP_I: Linear = Linear {
    seeds: &["1", "p"],
    betas: &[concat!("p(2nu+2n+1)/", d2!()), concat!("(1-p^2)/", d2!())],
};

const EXP_NEG_I: Linear = Linear {
    seeds: &["1", "-p"],
    betas: &[concat!("-p(2nu+2n+1)/", d2!()), concat!("(1-p^2)/", d2!())],
};

const EXP_I_I: Linear = Linear {
    seeds: &["1", "i*p"],
    betas: &[concat!("i*p(2nu+2n+1)/", d2!()), concat!("(p^2+1)/", d2!())],
};

const EXP_NEG_I_I: Linear = Linear {
    seeds: &["1", "-i*p"],
    betas: &[concat!("-i*p(2nu+2n+1)/", d2!()), concat!("(p^2+1)/", d2!())],
};

const POWER_J: Linear = Linear {
    seeds: &[
        "1",
        "-theta*p",
        "1/2 theta^2(p-1)p - 1/(4(nu+1))",
        "theta*p/(4(nu+1)) - 1/6 theta^3(p-2)(p-1)p",
    ],
    betas: &[
        concat!("theta(2n^2+4nu*n-2n*p-2nu*p-p)/", d2!()),
        concat!("(theta^2(n-p-1)(2nu+n-p-1)+1)/", d2!()),
        concat!("2theta/", d2!()),
        concat!("-theta^2/", d2!()),
    ],
};

const POWER_I: Linear = Linear {
    seeds: &[
        "1",
        "-theta*p",
        "1/2 theta^2(p-1)p + 1/(4(nu+1))",
        "-1/6 theta^3(p-2)(p-1)p - theta*p/(4(nu+1))",
    ],
    betas: &[
        concat!("theta(2n^2+4nu*n-2n*p-2nu*p-p)/", d2!()),
        concat!("(1-theta^2(n-p-1)(2nu+n-p-1))/", d2!()),
        concat!("-2theta/", d2!()),
        concat!("theta^2/", d2!()),
    ],
};

const EXP_ARCTAN_J: Linear = Linear {
    seeds: &[
        "1",
        "-p",
        "p^2/2 - 1/(4(nu+1))",
        "1/3(p - p^3/2) + p/(4(nu+1))",
        "1/96(3/(nu^2+3nu+2) + 4p^2(-3/(nu+1) + p^2 - 8))",
    ],
    betas: &[
        concat!("-p(2nu+2n+1)/", d2!()),
        concat!("-(-4nu+2n(2nu+n-2)+p^2+3)/", d2!()),
        concat!("p(-2nu-2n+5)/", d2!()),
        concat!("(6nu-n(2nu+n-6)-11)/", d2!()),
        concat!("-1/", d2!()),
    ],
};

const EXP_ARCTAN_I: Linear = Linear {
    seeds: &[
        "1",
        "-p",
        "p^2/2 + 1/(4(nu+1))",
        "1/3(p - p^3/2) - p/(4(nu+1))",
        "1/96(3/(nu^2+3nu+2) + 4p^2(3/(nu+1) + p^2 - 8))",
    ],
    betas: &[
        concat!("-p(2nu+2n+1)/", d2!()),
        concat!("-(-4nu+2n(2nu+n-2)+p^2+1)/", d2!()),
        concat!("p(-2nu-2n+5)/", d2!()),
        concat!("(6nu-n(2nu+n-6)-7)/", d2!()),
        concat!("1/", d2!()),
    ],
};

const TRIG_J: [&str; 3] = [
    concat!(
        "(-4(p^2-1)n^4 - 16(nu-1)(p^2-1)n^3 + 2(4(nu-6)nu + (-12(nu-2)nu - 7)p^2 + 9)n^2",
        " + 2(-2nu(2nu(2nu+5)-9) + (3-2nu(4nu^2-2nu+7))p^2 + 1)n",
        " - (2nu-1)(2nu+1)^2(2(nu+1)p^2+1))/",
        d4!()
    ),
    concat!("-(8n^2(p^4-1) + 16(nu-2)n(p^4-1) + (p^2-1)(-4nu(nu+8) + (4nu(5nu-8)+27)p^2 + 33))/", d4!()),
    concat!("-4(p^2-1)^3/", d4!()),
];

const HYP_J: [&str; 3] = [
    concat!(
        "(4(p^2+1)n^4 + 16(nu-1)(p^2+1)n^3 + 2(4(nu-6)nu + (12(nu-2)nu+7)p^2 + 9)n^2",
        " + 2(-2nu(2nu(2nu+5)-9) + (2nu(4nu^2-2nu+7)-3)p^2 + 1)n",
        " + (2nu-1)(2nu+1)^2(2(nu+1)p^2-1))/",
        d4!()
    ),
    concat!(
        "-(8(p^4-1)n^2 + 16(p^4-1)(nu-2)n + (p^2+1)((4nu(5nu-8)+27)p^2 + 4nu(nu+8) - 33))",
        "/((n+1)(n+2)(n+2nu+1)(n+2nu+2)(4nu^2-1))"
    ),
    concat!("4(p^2+1)^3/", d4!()),
];

const TRIG_I: [&str; 3] = [
    concat!(
        "-(4(p^2+1)n^4 + 16(nu-1)(p^2+1)n^3 + 2(4(nu-6)nu + (12(nu-2)nu+7)p^2 + 9)n^2",
        " + 2(-2nu(2nu(2nu+5)-9) + (2nu(4nu^2-2nu+7)-3)p^2 + 1)n",
        " + (2nu-1)(2nu+1)^2(2(nu+1)p^2-1))/",
        d4!()
    ),
    concat!("-(8n^2(p^4-1) + 16(nu-2)n(p^4-1) + (p^2+1)(4nu(nu+8) + (4nu(5nu-8)+27)p^2 - 33))/", d4!()),
    concat!("-4(p^2+1)^3/", d4!()),
];

const HYP_I: [&str; 3] = [
    concat!(
        "(4(p^2-1)n^4 + 16(nu-1)(p^2-1)n^3 + 2(-4(nu-6)nu + (12(nu-2)nu+7)p^2 - 9)n^2",
        " + 2(2nu(2nu(2nu+5)-9) + (2nu(4nu^2-2nu+7)-3)p^2 - 1)n",
        " + (2nu-1)(2nu+1)^2(2(nu+1)p^2+1))/",
        d4!()
    ),
    concat!("-(8n^2(p^4-1) + 16(nu-2)n(p^4-1) + (p^2-1)(-4nu(nu+8) + (4nu(5nu-8)+27)p^2 + 33))/", d4!()),
    concat!("4(p^2-1)^3/", d4!()),
];

const DEEP_J: [&str; 14] = [
    concat!("2p^2(nu+n)/", d2!()),
    concat!(
        "-(-(n-4)(n-3)(n-2)(n-1)(p^4+4(4nu^2-1)p^2+4)",
        " - 2(2nu+1)(n-3)(n-2)(n-1)(p^4+8(2nu^2+nu-1)p^2+4)",
        " - 2(n-2)(n-1)(4nu^2-1)(4(nu+1)(2nu+1)p^2+1)",
        " + (2nu-1)(2nu+1)^2 + 2(2nu-1)(2nu+1)(n-1)(nu(p^4+2)+p^4+4))/",
        d14!()
    ),
    concat!(
        "-p^2(4(n-5)(n-4)(n-3)(n-2)p^2 + 2(n-4)(n-3)(n-2)(p^4+(4nu(3nu+2)-1)p^2+4)",
        " + 3(n-3)(n-2)(2nu+1)(p^2(6nu(2nu+1)+p^2-8)+4)",
        " + (4nu^2-1)(n-2)(p^4+2(nu(6nu+5)-2)p^2+2)",
        " - 2(nu+2)(2nu-1)(2nu+1))/",
        d14!()
    ),
    concat!(
        "-(2(n-6)(n-5)(n-4)(n-3)p^2(p^4+3(4nu^2-1)p^2+8)",
        " + 8(n-5)(n-4)(n-3)p^2(8nu+p^2(nu(12nu(nu+1)+p^2-3)-3)+4)",
        " - (n-4)(n-3)(p^8+12nu*p^6-6(2nu(2nu(4nu^2+6nu+1)-3)-3)p^4+(8-32nu^2)p^2+8)",
        " - (2nu+1)(n-3)(p^8+4(2nu(nu+1)-3)p^6+6p^4+16(nu+2)(2nu-1)p^2+8)",
        " - (2nu-1)(2nu+1)(-p^4+(8nu+4)p^2-1))/",
        d14!()
    ),
    concat!(
        "-p^2(-8(n-7)(n-6)(n-5)(n-4)p^4",
        " - 2(n-6)(n-5)(n-4)p^2(p^4+(4nu(3nu+4)+9)p^2+12)",
        " - (n-5)(n-4)p^2(72nu+(6nu+1)p^4+6(12(nu+1)nu^2+nu-1)p^2+12)",
        " - (n-4)((2nu-3)(2nu+1)p^6+(2nu(2nu(2nu(6nu+1)-9)-1)+4)p^4+(24(nu-2)nu-26)p^2-8)",
        " + (2nu+1)(p^4+2(nu(6nu+5)-5)p^2+4))/",
        d14!()
    ),
    concat!(
        "-(-(n-8)(n-7)(n-6)(n-5)p^4(p^4+4(4nu^2-1)p^2+24)",
        " - 2(n-7)(n-6)(n-5)p^4(48nu+(2nu-1)p^2(8(nu+1)(2nu+1)+p^2)+24)",
        " + 4(n-6)(n-5)p^2((3nu+2)p^6+(-4(4nu^2+6nu+1)nu^2+6nu+5)p^4+(3-12nu^2)p^2+8)",
        " + 2(n-5)p^2(32nu+(4(nu+2)nu^2+nu-1)p^6+4(3nu+1)p^4+12(nu+2)(2nu-1)(2nu+1)p^2+16)",
        " - p^8 - 2(4nu^2+2nu-3)p^6 + (12nu(4nu^2+2nu-1)-11)p^4 + 4(1-4nu^2)p^2 - 4)/",
        d14!()
    ),
    concat!(
        "-p^4(4(n-9)(n-8)(n-7)(n-6)p^4 + 2(n-8)(n-7)(n-6)p^2((4nu(nu+2)+9)p^2+12)",
        " + 6(n-7)(n-6)p^2(12nu+(2nu+1)(2nu^2+nu+2)p^2-2)",
        " + 2(n-6)(((1-2nu)^2nu(2nu+1)-1)p^4+(12(nu-4)nu-31)p^2-12)",
        " + (1-2nu)p^4 - 2nu(2nu+1)(6nu+1)p^2 + 8 - 24nu)/",
        d14!()
    ),
    concat!(
        "-p^2((n-10)(n-9)(n-8)(n-7)p^4((4nu^2-1)p^2+16)",
        " + 4(n-9)(n-8)(n-7)(2nu+1)p^4((2nu^2+nu-1)p^2+8)",
        " + 2(n-8)(n-7)p^2((nu(2nu(4nu^2+6nu+1)-3)-4)p^4+4(4nu^2-1)p^2-24)",
        " - 2(n-7)p^2(48nu+(6nu+1)p^4+8(nu+2)(2nu-1)(2nu+1)p^2+24)",
        " + (4nu(nu+1)+3)p^6 + 2(7-4nu(4nu^2+2nu-1))p^4 + 6(4nu^2-1)p^2 + 16)/",
        d14!()
    ),
    concat!(
        "2p^6((n-1)((4(nu-51)nu+835)p^2-12) - 12nu + 6(2nu-17)(n-1)^2p^2 + 4(n-1)^3p^2",
        " - (nu(4nu(nu+7)-835)+2222)p^2 + 98)/",
        d14!()
    ),
    concat!(
        "2p^4(2n^4 + 8(nu-10)n^3 + (4nu^2-240nu+1197)n^2 - (8nu^3+92nu^2-2394nu+7937)n",
        " - 2p^2(-4nu^2-144nu+8n^2+16(nu-9)n+649) + p^4(68nu^3+502nu^2-7937nu+19677) + 12)/",
        d14!()
    ),
    concat!("8p^8(nu+n-12)/", d14!()),
    concat!("p^6(p^2(-4nu^2-176nu+8n^2+16(nu-11)n+969)-16)/", d14!()),
    "0",
    concat!("4p^8/", d14!()),
];

const DEEP_I: [&str; 14] = [
    concat!("2p^2(nu+n)/", d2!()),
    concat!(
        "((n-4)(n-3)(n-2)(n-1)(p^4+4(4nu^2-1)p^2-4)",
        " + 2(2nu+1)(n-3)(n-2)(n-1)(p^4+8(2nu^2+nu-1)p^2-4)",
        " + 2(4nu^2-1)(n-2)(n-1)(4(nu+1)(2nu+1)p^2-1)",
        " + (2nu-1)(2nu+1)^2 - 2(2nu-1)(2nu+1)(n-1)((nu+1)p^4-2(nu+2)))/",
        d14!()
    ),
    concat!(
        "-p^2(4(n-5)(n-4)(n-3)(n-2)p^2 + 2(n-4)(n-3)(n-2)(p^4+(4nu(3nu+2)-1)p^2-4)",
        " + 3(2nu+1)(n-3)(n-2)(p^2(6nu(2nu+1)+p^2-8)-4)",
        " + (4nu^2-1)(n-2)(p^4+2(nu(6nu+5)-2)p^2-2)",
        " + 2(nu+2)(2nu-1)(2nu+1))/",
        d14!()
    ),
    concat!(
        "(-2(n-6)(n-5)(n-4)(n-3)p^2(p^4+3(4nu^2-1)p^2-8)",
        " - 8(n-5)(n-4)(n-3)p^2(-8nu+p^2(nu(12nu(nu+1)+p^2-3)-3)-4)",
        " + (n-4)(n-3)(p^8+12nu*p^6-6(2nu(2nu(4nu^2+6nu+1)-3)-1)p^4+8(4nu^2-1)p^2+8)",
        " + (2nu+1)(n-3)(p^8+4(2nu(nu+1)-3)p^6-6p^4-16(nu+2)(2nu-1)p^2+8)",
        " - (2nu-1)(2nu+1)(-p^4+(8nu+4)p^2+1))/",
        d14!()
    ),
    concat!(
        "p^2(8n^4p^4 + 2n^3p^2(p^4+(12nu^2+16nu-79)p^2-12)",
        " + n^2p^2(-72nu+(6nu-29)p^4+2(36nu^3-144nu^2-237nu+578)p^2+348)",
        " + 2n((2nu^2-29nu+68)p^6+(24nu^4-320nu^3+546nu^2+1156nu-1855)p^4+(-12nu^2+348nu-821)p^2-4)",
        " - 8nu - 8(2nu^2-17nu+26)p^6 + (-192nu^4+1408nu^3-1296nu^2-3710nu+4409)p^4",
        " + 2(12nu^3+64nu^2-821nu+1263)p^2 + 28)/",
        d14!()
    ),
    concat!(
        "((n-8)(n-7)(n-6)(n-5)p^4(p^4+4(4nu^2-1)p^2-24)",
        " + 2(n-7)(n-6)(n-5)((2nu-1)p^8+8(nu+1)(2nu-1)(2nu+1)p^6-24(2nu+1)p^4)",
        " - 4(n-6)(n-5)p^2((3nu+2)p^6-(2nu(2nu(4nu^2+6nu+1)-3)+1)p^4+3(4nu^2-1)p^2+8)",
        " - 2(n-5)p^2(32nu+(4(nu+2)nu^2+nu-1)p^6-4(3nu+1)p^4+12(-4nu^3-8nu^2+nu+2)p^2+16)",
        " - p^8 - 2(4nu^2+2nu-3)p^6 + (12nu(4nu^2+2nu-1)-1)p^4 + 4(4nu^2-1)p^2 - 4)/",
        d14!()
    ),
    concat!(
        "p^4(-4(n-9)(n-8)(n-7)(n-6)p^4 - 2(n-8)(n-7)(n-6)p^2((4nu(nu+2)+9)p^2-12)",
        " - 6(n-7)(n-6)p^2(-12nu+(2nu+1)(2nu^2+nu+2)p^2+2)",
        " - 2(n-6)((nu(2nu+1)(1-2nu)^2+1)p^4+(31-12(nu-4)nu)p^2-12)",
        " + 24nu + (1-2nu)p^4 - 2nu(2nu+1)(6nu+1)p^2 - 8)/",
        d14!()
    ),
    concat!(
        "-((n-10)(n-9)(n-8)(n-7)p^6((4nu^2-1)p^2-16)",
        " + 4(2nu+1)(n-9)(n-8)(n-7)p^6((2nu^2+nu-1)p^2-8)",
        " + 2(n-8)(n-7)p^4((nu(2nu(4nu^2+6nu+1)-3)+2)p^4+(4-16nu^2)p^2-24)",
        " + 2(n-7)((6nu+1)p^8+8(nu+2)(2nu-1)(2nu+1)p^6-24(2nu+1)p^4)",
        " - p^2((4nu(nu+1)+3)p^6-2(4nu(4nu^2+2nu-1)+3)p^4+(6-24nu^2)p^2+16))/",
        d14!()
    ),
    concat!(
        "2p^6(-4n^3p^2 + 6(19-2nu)n^2p^2 - n((4(nu-57)nu+1051)p^2+12)",
        " - 12nu + (nu(4nu(nu+8)-1051)+3163)p^2 + 110)/",
        d14!()
    ),
    concat!(
        "2p^4(-2n^4p^4 - 8(nu-10)n^3p^4 - n^2p^2((4nu^2-240nu+1197)p^2+16)",
        " + n((8nu^3+92nu^2-2394nu+7937)p^4-32(nu-9)p^2)",
        " - (68nu^3+502nu^2-7937nu+19672)p^4 + 2(4nu^2+144nu-649)p^2 - 12)/",
        d14!()
    ),
    concat!("8p^8(nu+n-12)/", d14!()),
    concat!("p^6(p^2(-4nu(nu+44)+8n^2+16(nu-11)n+969)+16)/", d14!()),
    "0",
    concat!("-4p^8/", d14!()),
];

const ARCSIN_J_SEEDS: [&str; 14] = [
    "0",
    "p",
    "0",
    "p^3/6 - p/(4(nu+1))",
    "0",
    "3p^5/40 - p^3/(24(nu+1)) + p/(32(nu+1)(nu+2))",
    "0",
    "5p^7/112 - 3p^5/(160(nu+1)) + p^3/(192(nu+1)(nu+2)) - p/(384(nu+1)(nu+2)(nu+3))",
    "0",
    concat!(
        "35p^9/1152 - 5p^7/(448(nu+1)) + 3p^5/(1280(nu+1)(nu+2)) - p^3/(2304(nu+1)(nu+2)(nu+3))",
        " + p/(6144(nu+1)(nu+2)(nu+3)(nu+4))"
    ),
    "0",
    concat!(
        "63p^11/2816 - 35p^9/(4608(nu+1)) + 5p^7/(3584(nu+1)(nu+2)) - p^5/(5120(nu+1)(nu+2)(nu+3))",
        " + p^3/(36864(nu+1)(nu+2)(nu+3)(nu+4)) - p/(122880(nu+1)(nu+2)(nu+3)(nu+4)(nu+5))"
    ),
    "0",
    concat!(
        "231p^13/13312 - 63p^11/(11264(nu+1)) + 35p^9/(36864(nu+1)(nu+2))",
        " - 5p^7/(43008(nu+1)(nu+2)(nu+3)) + p^5/(81920(nu+1)(nu+2)(nu+3)(nu+4))",
        " - p^3/(737280(nu+1)(nu+2)(nu+3)(nu+4)(nu+5)) + p/(2949120(nu+1)(nu+2)(nu+3)(nu+4)(nu+5)(nu+6))"
    ),
];

const ARCSIN_I_SEEDS: [&str; 14] = [
    "0",
    "p",
    "0",
    "p^3/6 + p/(4(nu+1))",
    "0",
    "3p^5/40 + p^3/(24(nu+1)) + p/(32(nu+1)(nu+2))",
    "0",
    "5p^7/112 + 3p^5/(160(nu+1)) + p^3/(192(nu+1)(nu+2)) + p/(384(nu+1)(nu+2)(nu+3))",
    "0",
    concat!(
        "35p^9/1152 + 5p^7/(448(nu+1)) + 3p^5/(1280(nu+1)(nu+2)) + p^3/(2304(nu+1)(nu+2)(nu+3))",
        " + p/(6144(nu+1)(nu+2)(nu+3)(nu+4))"
    ),
    "0",
    concat!(
        "63p^11/2816 + 35p^9/(4608(nu+1)) + 5p^7/(3584(nu+1)(nu+2)) + p^5/(5120(nu+1)(nu+2)(nu+3))",
        " + p^3/(36864(nu+1)(nu+2)(nu+3)(nu+4)) + p/(122880(nu+1)(nu+2)(nu+3)(nu+4)(nu+5))"
    ),
    "0",
    concat!(
        "231p^13/13312 + 63p^11/(11264(nu+1)) + 35p^9/(36864(nu+1)(nu+2))",
        " + 5p^7/(43008(nu+1)(nu+2)(nu+3)) + p^5/(81920(nu+1)(nu+2)(nu+3)(nu+4))",
        " + p^3/(737280(nu+1)(nu+2)(nu+3)(nu+4)(nu+5)) + p/(2949120(nu+1)(nu+2)(nu+3)(nu+4)(nu+5)(nu+6))"
    ),
];

const ARCCOS_J_SEEDS: [&str; 14] = [
    "pi/2",
    "-p",
    "-pi/(8(nu+1))",
    "p/(4(nu+1)) - p^3/6",
    "pi/(64(nu+1)(nu+2))",
    "-3p^5/40 + p^3/(24(nu+1)) - p/(32(nu+1)(nu+2))",
    "-pi/(768(nu+1)(nu+2)(nu+3))",
    "-5p^7/112 + 3p^5/(160(nu+1)) - p^3/(192(nu+1)(nu+2)) + p/(384(nu+1)(nu+2)(nu+3))",
    "pi/(12288(nu+1)(nu+2)(nu+3)(nu+4))",
    concat!(
        "-35p^9/1152 + 5p^7/(448(nu+1)) - 3p^5/(1280(nu+1)(nu+2)) + p^3/(2304(nu+1)(nu+2)(nu+3))",
        " - p/(6144(nu+1)(nu+2)(nu+3)(nu+4))"
    ),
    "-pi/(245760(nu+1)(nu+2)(nu+3)(nu+4)(nu+5))",
    concat!(
        "-63p^11/2816 + 35p^9/(4608(nu+1)) - 5p^7/(3584(nu+1)(nu+2)) + p^5/(5120(nu+1)(nu+2)(nu+3))",
        " - p^3/(36864(nu+1)(nu+2)(nu+3)(nu+4)) + p/(122880(nu+1)(nu+2)(nu+3)(nu+4)(nu+5))"
    ),
    "pi/(5898240(nu+1)(nu+2)(nu+3)(nu+4)(nu+5)(nu+6))",
    concat!(
        "-231p^13/13312 + 63p^11/(11264(nu+1)) - 35p^9/(36864(nu+1)(nu+2))",
        " + 5p^7/(43008(nu+1)(nu+2)(nu+3)) - p^5/(81920(nu+1)(nu+2)(nu+3)(nu+4))",
        " + p^3/(737280(nu+1)(nu+2)(nu+3)(nu+4)(nu+5)) - p/(2949120(nu+1)(nu+2)(nu+3)(nu+4)(nu+5)(nu+6))"
    ),
];

const ARCCOS_I_SEEDS: [&str; 14] = [
    "pi/2",
    "-p",
    "pi/(8(nu+1))",
    "-p^3/6 - p/(4(nu+1))",
    "pi/(64(nu+1)(nu+2))",
    "-3p^5/40 - p^3/(24(nu+1)) - p/(32(nu+1)(nu+2))",
    "pi/(768(nu+1)(nu+2)(nu+3))",
    "-5p^7/112 - 3p^5/(160(nu+1)) - p^3/(192(nu+1)(nu+2)) - p/(384(nu+1)(nu+2)(nu+3))",
    "pi/(12288(nu+1)(nu+2)(nu+3)(nu+4))",
    concat!(
        "-35p^9/1152 - 5p^7/(448(nu+1)) - 3p^5/(1280(nu+1)(nu+2)) - p^3/(2304(nu+1)(nu+2)(nu+3))",
        " - p/(6144(nu+1)(nu+2)(nu+3)(nu+4))"
    ),
    "pi/(245760(nu+1)(nu+2)(nu+3)(nu+4)(nu+5))",
    concat!(
        "-63p^11/2816 - 35p^9/(4608(nu+1)) - 5p^7/(3584(nu+1)(nu+2)) - p^5/(5120(nu+1)(nu+2)(nu+3))",
        " - p^3/(36864(nu+1)(nu+2)(nu+3)(nu+4)) - p/(122880(nu+1)(nu+2)(nu+3)(nu+4)(nu+5))"
    ),
    "pi/(5898240(nu+1)(nu+2)(nu+3)(nu+4)(nu+5)(nu+6))",
    concat!(
        "-231p^13/13312 - 63p^11/(11264(nu+1)) - 35p^9/(36864(nu+1)(nu+2))",
        " - 5p^7/(43008(nu+1)(nu+2)(nu+3)) - p^5/(81920(nu+1)(nu+2)(nu+3)(nu+4))",
        " - p^3/(737280(nu+1)(nu+2)(nu+3)(nu+4)(nu+5)) - p/(2949120(nu+1)(nu+2)(nu+3)(nu+4)(nu+5)(nu+6))"
    ),
];

const SIN_J_SEEDS: [&str; 6] =
    ["0", "p", "0", "-p^3/6 - p/(4(nu+1))", "0", "p^5/120 + p^3/(24(nu+1)) + p/(32(nu+1)(nu+2))"];
const COS_J_SEEDS: [&str; 5] =
    ["1", "0", "-1/(4(nu+1)) - p^2/2", "0", "1/(32(nu+1)(nu+2)) + p^4/24 + p^2/(8(nu+1))"];
const SINH_J_SEEDS: [&str; 6] =
    ["0", "p", "0", "p^3/6 - p/(4(nu+1))", "0", "p^5/120 - p^3/(24(nu+1)) + p/(32(nu+1)(nu+2))"];
const COSH_J_SEEDS: [&str; 5] =
    ["1", "0", "p^2/2 - 1/(4(nu+1))", "0", "1/(32(nu+1)(nu+2)) + p^4/24 - p^2/(8(nu+1))"];
const SIN_I_SEEDS: [&str; 6] =
    ["0", "p", "0", "-p^3/6 + p/(4(nu+1))", "0", "p^5/120 - p^3/(24(nu+1)) + p/(32(nu+1)(nu+2))"];
const COS_I_SEEDS: [&str; 5] =
    ["1", "0", "1/(4(nu+1)) - p^2/2", "0", "1/(32(nu+1)(nu+2)) + p^4/24 - p^2/(8(nu+1))"];
const SINH_I_SEEDS: [&str; 6] =
    ["0", "p", "0", "p^3/6 + p/(4(nu+1))", "0", "p^5/120 + p^3/(24(nu+1)) + p/(32(nu+1)(nu+2))"];
const COSH_I_SEEDS: [&str; 5] = ["1", "0", "p^2/2 + 1/(4(nu+1))", "0", "1/96(-3/(nu+2) + 4p^4 + (12p^2+3)/(nu+1))"];

/// The printed table of a family.
pub(crate) fn table(f: FamilyId) -> Table {
    use BesselKind::{I, J};
    use HKind::*;
    let lin = |seeds, betas| Linear { seeds, betas };
    match (f.h, f.bessel) {
        (Exp, J) => Table::Linear(EXP_J),
        (Exp, I) => Table::Linear(EXP_I),
        (SinhViaExp, J) => Table::Pair { u: EXP_J, v: EXP_NEG_J, sign: -1 },
        (CoshViaExp, J) => Table::Pair { u: EXP_J, v: EXP_NEG_J, sign: 1 },
        (SinViaExp, J) => Table::Pair { u: EXP_I_J, v: EXP_NEG_I_J, sign: -1 },
        (CosViaExp, J) => Table::Pair { u: EXP_I_J, v: EXP_NEG_I_J, sign: 1 },
        (SinhViaExp, I) => Table::Pair { u: EXP_I, v: EXP_NEG_I, sign: -1 },
        (CoshViaExp, I) => Table::Pair { u: EXP_I, v: EXP_NEG_I, sign: 1 },
        (SinViaExp, I) => Table::Pair { u: EXP_I_I, v: EXP_NEG_I_I, sign: -1 },
        (CosViaExp, I) => Table::Pair { u: EXP_I_I, v: EXP_NEG_I_I, sign: 1 },
        (Power, J) => Table::Linear(POWER_J),
        (Power, I) => Table::Linear(POWER_I),
        (ExpArctan, J) => Table::Linear(EXP_ARCTAN_J),
        (ExpArctan, I) => Table::Linear(EXP_ARCTAN_I),
        (Sin, J) => Table::Parity(lin(&SIN_J_SEEDS, &TRIG_J)),
        (Cos, J) => Table::Parity(lin(&COS_J_SEEDS, &TRIG_J)),
        (Sinh, J) => Table::Parity(lin(&SINH_J_SEEDS, &HYP_J)),
        (Cosh, J) => Table::Parity(lin(&COSH_J_SEEDS, &HYP_J)),
        (Sin, I) => Table::Parity(lin(&SIN_I_SEEDS, &TRIG_I)),
        (Cos, I) => Table::Parity(lin(&COS_I_SEEDS, &TRIG_I)),
        (Sinh, I) => Table::Parity(lin(&SINH_I_SEEDS, &HYP_I)),
        (Cosh, I) => Table::Parity(lin(&COSH_I_SEEDS, &HYP_I)),
        (Arcsin, J) => Table::Linear(lin(&ARCSIN_J_SEEDS, &DEEP_J)),
        (Arccos, J) => Table::Linear(lin(&ARCCOS_J_SEEDS, &DEEP_J)),
        (Arcsin, I) => Table::Linear(lin(&ARCSIN_I_SEEDS, &DEEP_I)),
        (Arccos, I) => Table::Linear(lin(&ARCCOS_I_SEEDS, &DEEP_I)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::expr::parse;

    #[test]
    fn every_formula_parses() {
        for f in FamilyId::all() {
            let lins = match table(f) {
                Table::Linear(l) | Table::Parity(l) => vec![l],
                Table::Pair { u, v, .. } => vec![u, v],
            };
            for l in lins {
                for s in l.seeds.iter().chain(l.betas) {
                    if let Err(e) = parse(s) {
                        panic!("{f}: {e} in `{s}`");
                    }
                }
            }
        }
    }
}
