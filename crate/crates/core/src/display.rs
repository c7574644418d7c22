//! Shared printing for `coefficient * basis-symbol` sums whose
//! coefficients are ring elements.

use std::fmt;

use crate::poly::{Laurent, ThreePointFraction};
use crate::scalar::Field;

pub(crate) enum CoeffForm {
    One,
    MinusOne,
    /// A single factor that can be followed by `*sym` without parentheses.
    Atom(String),
    NegAtom(String),
    Compound(String),
}

pub(crate) trait RingCoeff {
    fn is_zero_coeff(&self) -> bool;
    fn coeff_form(&self) -> CoeffForm;
}

impl<F: Field> RingCoeff for Laurent<F> {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }

    fn coeff_form(&self) -> CoeffForm {
        if self.num_terms() != 1 {
            return CoeffForm::Compound(self.to_string());
        }
        let (e, c) = self.terms().next().unwrap();
        let negative = c.prints_negative();
        let mag = Laurent::monomial(if negative { -c.clone() } else { c.clone() }, e).to_string();
        match (negative, mag == "1") {
            (false, true) => CoeffForm::One,
            (true, true) => CoeffForm::MinusOne,
            (false, false) => CoeffForm::Atom(mag),
            (true, false) => CoeffForm::NegAtom(mag),
        }
    }
}

impl RingCoeff for ThreePointFraction {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }

    fn coeff_form(&self) -> CoeffForm {
        match self.to_laurent() {
            Some(l) => l.coeff_form(),
            None => {
                let s = self.to_string();
                if s.starts_with('(') && s.ends_with(')') || !s.contains(' ') {
                    CoeffForm::Atom(s)
                } else {
                    CoeffForm::Compound(s)
                }
            }
        }
    }
}

/// Writes `c₁*s₁ + c₂*s₂ + …`, skipping zero coefficients; `0` when empty.
pub(crate) fn write_ring_combination<C: RingCoeff>(
    f: &mut fmt::Formatter<'_>,
    terms: &[(&C, &str)],
) -> fmt::Result {
    let mut first = true;
    for (c, sym) in terms {
        if c.is_zero_coeff() {
            continue;
        }
        let (negative, body) = match c.coeff_form() {
            CoeffForm::One => (false, sym.to_string()),
            CoeffForm::MinusOne => (true, sym.to_string()),
            CoeffForm::Atom(a) => (false, format!("{a}*{sym}")),
            CoeffForm::NegAtom(a) => (true, format!("{a}*{sym}")),
            CoeffForm::Compound(s) => (false, format!("({s})*{sym}")),
        };
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        write!(f, "{body}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
