//! Published multiplet tables, transcribed row by row. Kept independent of
//! the library's own label tables.

#![allow(dead_code)]

use so42_multiplets::{HcTriple, LinExpr, P1Signature, Symbol};

pub fn e(s: &str) -> LinExpr {
    s.parse()
        .unwrap_or_else(|err| panic!("bad expression `{s}`: {err}"))
}

pub struct Row {
    pub label: &'static str,
    /// `m1, m2, m3, m12, m23, m13`.
    pub sextuple: [&'static str; 6],
    /// `n′, k, ν′`, when the published list states it.
    pub signature: Option<[&'static str; 3]>,
    /// Identifications with maximal non-cuspidal inductions.
    pub chi: &'static [&'static str],
}

impl Row {
    pub fn hc(&self) -> HcTriple {
        HcTriple::new(
            e(self.sextuple[0]),
            e(self.sextuple[1]),
            e(self.sextuple[2]),
        )
    }

    pub fn sextuple(&self) -> [LinExpr; 6] {
        self.sextuple.map(e)
    }

    pub fn signature(&self) -> Option<P1Signature> {
        self.signature
            .map(|[a, b, c]| P1Signature::new(e(a), e(b), e(c)))
    }
}

pub struct Table {
    pub name: &'static str,
    pub zeros: &'static [Symbol],
    pub rows: &'static [Row],
}

const fn row(
    label: &'static str,
    sextuple: [&'static str; 6],
    signature: Option<[&'static str; 3]>,
    chi: &'static [&'static str],
) -> Row {
    Row {
        label,
        sextuple,
        signature,
        chi,
    }
}

use Symbol::*;

/// Signatures are the `{n′, k, ν′}` list with `(m1, m2, m3) = (p, ν, n)`.
pub const MAIN: Table = Table {
    name: "main 12-plet",
    zeros: &[],
    rows: &[
        row(
            "Λ⁻₀",
            ["p+nu", "-nu", "n+nu", "p", "n", "p+nu+n"],
            Some(["p-n", "nu", "-p-nu-n"]),
            &["χ′⁻_{pνn}"],
        ),
        row(
            "Λ⁻a",
            ["nu", "-p-nu", "p+nu+n", "-p", "n", "n+nu"],
            Some(["-p-n", "p+nu", "-nu-n"]),
            &["χ″⁻_{pνn}"],
        ),
        row(
            "Λ⁻b",
            ["p+nu+n", "-n-nu", "nu", "p", "-n", "p+nu"],
            Some(["p+n", "nu+n", "-p-nu"]),
            &["χ″⁺_{pνn}"],
        ),
        row(
            "Λ⁻c",
            ["-nu", "-p", "p+nu+n", "-p-nu", "n+nu", "n"],
            Some(["-p-2nu-n", "p", "-n"]),
            &[],
        ),
        row(
            "Λ⁻d",
            ["n+nu", "-p-nu-n", "p+nu", "-p", "-n", "nu"],
            Some(["n-p", "p+nu+n", "-nu"]),
            &["χ′⁺_{pνn}"],
        ),
        row(
            "Λ⁻e",
            ["p+nu+n", "-n", "-nu", "p+nu", "-n-nu", "p"],
            Some(["p+2nu+n", "n", "-p"]),
            &[],
        ),
        row(
            "Λ⁺e",
            ["n+nu", "-n", "-p-nu", "nu", "-p-nu-n", "-p"],
            Some(["p+2nu+n", "n", "p"]),
            &[],
        ),
        row(
            "Λ⁺d",
            ["n", "-p-nu-n", "p", "-p-nu", "-nu-n", "-nu"],
            Some(["n-p", "p+nu+n", "nu"]),
            &["χ⁺_{pνn}"],
        ),
        row(
            "Λ⁺c",
            ["-n-nu", "-p", "p+nu", "-p-nu-n", "nu", "-n"],
            Some(["-p-2nu-n", "p", "n"]),
            &[],
        ),
        row(
            "Λ⁺b",
            ["n", "-n-nu", "-p", "-nu", "-p-nu-n", "-p-nu"],
            Some(["p+n", "nu+n", "p+nu"]),
            &[],
        ),
        row(
            "Λ⁺a",
            ["-n", "-p-nu", "p", "-p-nu-n", "-nu", "-nu-n"],
            Some(["-p-n", "p+nu", "nu+n"]),
            &[],
        ),
        row(
            "Λ⁺₀",
            ["-n", "-nu", "-p", "-nu-n", "-p-nu", "-p-nu-n"],
            Some(["p-n", "nu", "p+nu+n"]),
            &[],
        ),
    ],
};

pub const NU_ZERO: Table = Table {
    name: "septuplet nu=0",
    zeros: &[Nu],
    rows: &[
        row(
            "Λ⁻₀",
            ["p", "0", "n", "p", "n", "p+n"],
            Some(["p-n", "0", "-p-n"]),
            &["χ′⁻_{p0n}", "₂χ⁻_{pn}"],
        ),
        row(
            "Λ⁻a",
            ["0", "-p", "p+n", "-p", "n", "n"],
            Some(["-p-n", "p", "-n"]),
            &["χ″⁻_{p0n}"],
        ),
        row(
            "Λ⁻b",
            ["p+n", "-n", "0", "p", "-n", "p"],
            Some(["p+n", "n", "-p"]),
            &["χ″⁺_{p0n}"],
        ),
        row(
            "Λc",
            ["n", "-p-n", "p", "-p", "-n", "0"],
            Some(["n-p", "p+n", "0"]),
            &["χ′⁺_{p0n}", "χ⁺_{p0n}", "₂χ⁺_{pn}"],
        ),
        row(
            "Λ⁺b",
            ["n", "-n", "-p", "0", "-n-p", "-p"],
            Some(["p+n", "n", "p"]),
            &[],
        ),
        row(
            "Λ⁺a",
            ["-n", "-p", "p", "-n-p", "0", "-n"],
            Some(["-p-n", "p", "n"]),
            &[],
        ),
        row(
            "Λ⁺₀",
            ["-n", "0", "-p", "-n", "-p", "-n-p"],
            Some(["p-n", "0", "p+n"]),
            &[],
        ),
    ],
};

pub const P_ZERO: Table = Table {
    name: "septuplet p=0",
    zeros: &[P],
    rows: &[
        row(
            "Λ⁻₀",
            ["nu", "-nu", "n+nu", "0", "n", "nu+n"],
            None,
            &["χ′⁻_{0νn}", "χ″⁻_{0νn}", "₁χ⁻_{νn}"],
        ),
        row(
            "Λ⁻b",
            ["nu+n", "-n-nu", "nu", "0", "-n", "nu"],
            None,
            &["χ″⁺_{0νn}", "χ′⁺_{0νn}", "₁χ⁺_{νn}"],
        ),
        row("Λ⁻d", ["-nu", "0", "nu+n", "-nu", "n+nu", "n"], None, &[]),
        row("Λe", ["nu+n", "-n", "-nu", "nu", "-n-nu", "0"], None, &[]),
        row("Λ⁺d", ["-n-nu", "0", "nu", "-nu-n", "nu", "-n"], None, &[]),
        row(
            "Λ⁺b",
            ["n", "-nu-n", "0", "-nu", "-nu-n", "-nu"],
            None,
            &["χ⁺_{0νn}"],
        ),
        row(
            "Λ⁺₀",
            ["-n", "-nu", "0", "-nu-n", "-nu", "-nu-n"],
            None,
            &[],
        ),
    ],
};

pub const N_ZERO: Table = Table {
    name: "septuplet n=0",
    zeros: &[N],
    rows: &[
        row(
            "Λ⁻₀",
            ["p+nu", "-nu", "nu", "p", "0", "p+nu"],
            None,
            &["χ′⁻_{pν0}", "χ″⁺_{pν0}", "₃χ⁻_{pν}"],
        ),
        row(
            "Λ⁻a",
            ["nu", "-p-nu", "p+nu", "-p", "0", "nu"],
            None,
            &["χ″⁻_{pν0}", "χ′⁺_{pν0}", "₃χ⁺_{pν}"],
        ),
        row("Λ⁻e", ["p+nu", "0", "-nu", "p+nu", "-nu", "p"], None, &[]),
        row("Λd", ["-nu", "-p", "p+nu", "-p-nu", "nu", "0"], None, &[]),
        row("Λ⁺e", ["nu", "0", "-p-nu", "nu", "-p-nu", "-p"], None, &[]),
        row(
            "Λ⁺a",
            ["0", "-p-nu", "p", "-p-nu", "-nu", "-nu"],
            None,
            &["χ⁺_{pν0}"],
        ),
        row(
            "Λ⁺₀",
            ["0", "-nu", "-p", "-nu", "-p-nu", "-p-nu"],
            None,
            &[],
        ),
    ],
};

pub const PN_ZERO: Table = Table {
    name: "quartet p=n=0",
    zeros: &[P, N],
    rows: &[
        row(
            "Λ⁻₀",
            ["nu", "-nu", "nu", "0", "0", "nu"],
            None,
            &["χ′⁻_{0ν0}", "χ″⁻_{0ν0}", "χ″⁺_{0ν0}", "χ′⁺_{0ν0}", "χˢ_ν"],
        ),
        row("Λd", ["-nu", "0", "nu", "-nu", "nu", "0"], None, &[]),
        row("Λe", ["nu", "0", "-nu", "nu", "-nu", "0"], None, &[]),
        row(
            "Λ⁺₀",
            ["0", "-nu", "0", "-nu", "-nu", "-nu"],
            None,
            &["χ⁺_{0ν0}"],
        ),
    ],
};

pub const PNU_ZERO: Table = Table {
    name: "triplet p=nu=0",
    zeros: &[P, Nu],
    rows: &[
        row(
            "Λ⁻₀",
            ["0", "0", "n", "0", "n", "n"],
            None,
            &["χ′⁻_{00n}", "χ″⁻_{00n}"],
        ),
        row(
            "Λb",
            ["n", "-n", "0", "0", "-n", "0"],
            None,
            &["χ″⁺_{00n}", "χ′⁺_{00n}", "χ⁺_{00n}"],
        ),
        row("Λ⁺₀", ["-n", "0", "0", "-n", "0", "-n"], None, &[]),
    ],
};

pub const NUN_ZERO: Table = Table {
    name: "triplet nu=n=0",
    zeros: &[Nu, N],
    rows: &[
        row(
            "Λ⁻₀",
            ["p", "0", "0", "p", "0", "p"],
            None,
            &["χ′⁻_{p00}", "χ″⁺_{p00}"],
        ),
        row(
            "Λa",
            ["0", "-p", "p", "-p", "0", "0"],
            None,
            &["χ″⁻_{p00}", "χ′⁺_{p00}", "χ⁺_{p00}"],
        ),
        row("Λ⁺₀", ["0", "0", "-p", "0", "-p", "-p"], None, &[]),
    ],
};

pub const REDUCED: [&Table; 6] = [&NU_ZERO, &P_ZERO, &N_ZERO, &PN_ZERO, &PNU_ZERO, &NUN_ZERO];

pub const ALL: [&Table; 7] = [
    &MAIN, &NU_ZERO, &P_ZERO, &N_ZERO, &PN_ZERO, &PNU_ZERO, &NUN_ZERO,
];
