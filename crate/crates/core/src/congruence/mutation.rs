//! Deliberately broken variants of the closed-form ingredients. A checker
//! that still reports `holds` under one of these is not testing anything.

use super::qsums;
use super::record::{Theorem, VerificationRecord};

/// A single sign or exponent change in one formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mutant {
    #[default]
    Original,
    /// `−χ(n)·q^((n²−1)/3)` on the right of the central-binomial congruences.
    RhsSign,
    /// `χ(n)·q^((n²−1)/3 + 1)`.
    RhsExponent,
    /// `(−1)^(k+1)` in place of `(−1)^k` in the harmonic-type sum.
    HarmonicSign,
    /// `E(k) + 1` in place of `E(k)`.
    HarmonicExponent,
    /// `E(k) = k(k−χ(k))/3 + (k−1)(k−2)/6`: sign of the second part flipped.
    HarmonicExponentSign,
    /// `−χ(n−k)` in the central-sum expansion over `[2n, k]`.
    ExpansionSign,
    /// Exponent `(2m² − mχ(m) − 1)/3 + 1` in that expansion.
    ExpansionExponent,
}

impl Mutant {
    pub const ALL: [Mutant; 7] = [
        Mutant::RhsSign,
        Mutant::RhsExponent,
        Mutant::HarmonicSign,
        Mutant::HarmonicExponent,
        Mutant::HarmonicExponentSign,
        Mutant::ExpansionSign,
        Mutant::ExpansionExponent,
    ];

    /// The sweep whose verdicts the mutation should flip.
    pub fn target(self) -> Theorem {
        match self {
            Mutant::Original | Mutant::RhsSign | Mutant::RhsExponent => Theorem::Thm12,
            Mutant::HarmonicSign | Mutant::HarmonicExponent | Mutant::HarmonicExponentSign => {
                Theorem::Thm11
            }
            Mutant::ExpansionSign | Mutant::ExpansionExponent => Theorem::Id31,
        }
    }
}

/// Run the targeted check for parameter `n` with the mutated formula.
pub fn verify_mutated(mutant: Mutant, n: u64) -> VerificationRecord {
    match mutant.target() {
        Theorem::Thm12 => qsums::verify_thm12_with(n, mutant),
        Theorem::Thm11 => qsums::verify_thm11_with(n, mutant),
        Theorem::Id31 => qsums::verify_identity31_with(n, mutant),
        _ => unreachable!("mutants only target thm11, thm12 and id31"),
    }
}

/// Same for the double-sum congruence, which shares the right-hand side.
pub fn verify_thm13_mutated(mutant: Mutant, n: u64) -> VerificationRecord {
    qsums::verify_thm13_with(n, mutant)
}
