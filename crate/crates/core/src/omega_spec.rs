//! Parser for dilatation expressions such as `-z^2`, `(0.3+0.2i)*z`,
//! `(z+0.5)/(1+0.5*z)` or `z^2/(2+z)`.
//!
//! Grammar, with implicit multiplication between adjacent factors:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'|'/'] factor)*
//! factor := atom ['^' digits]
//! atom   := number | 'i' | 'z' | '(' expr ')'
//! ```

use num_complex::Complex64;
use thiserror::Error;

use crate::polyrat::{PolyError, Polynomial, RationalMap};

/// Tolerance for recognising `(z + A)/(1 + B z)` as a disk automorphism.
pub const MOEBIUS_CONJ_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("parse error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("Möbius form (z+A)/(1+B*z) needs B = conj(A), got A = {a:?}, B = {b:?}")]
    NotMoebius { a: [f64; 2], b: [f64; 2] },
    #[error("division by zero")]
    DivisionByZero,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A rational expression `num / den` during parsing.
#[derive(Clone, Debug)]
struct Frac {
    num: Polynomial<f64>,
    den: Polynomial<f64>,
}

impl Frac {
    fn constant(c: Complex64) -> Self {
        Self {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    fn add(&self, o: &Self, sign: f64) -> Self {
        Self {
            num: self
                .num
                .mul(&o.den)
                .add(&o.num.mul(&self.den).scale(Complex64::new(sign, 0.0))),
            den: self.den.mul(&o.den),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        Self {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
    }

    fn div(&self, o: &Self) -> Result<Self, ParseError> {
        if o.num.is_zero() {
            return Err(ParseError::DivisionByZero);
        }
        Ok(Self {
            num: self.num.mul(&o.den),
            den: self.den.mul(&o.num),
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Frac, ParseError> {
        let mut sign = 1.0;
        match self.peek() {
            Some(b'+') => self.pos += 1,
            Some(b'-') => {
                sign = -1.0;
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = Frac::constant(Complex64::new(0.0, 0.0)).add(&self.term()?, sign);
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = acc.add(&t, if op == b'+' { 1.0 } else { -1.0 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.div(&self.factor()?)?;
                }
                Some(c) if c == b'(' || c == b'z' || c == b'i' || c.is_ascii_digit() || c == b'.' => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Frac, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let Ok(n) = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("").parse::<u32>() else {
            return self.error("expected a non-negative integer exponent");
        };
        let mut out = Frac::constant(Complex64::new(1.0, 0.0));
        for _ in 0..n {
            out = out.mul(&base);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Frac, ParseError> {
        match self.peek() {
            Some(b'z') => {
                self.pos += 1;
                Ok(Frac {
                    num: Polynomial::monomial(Complex64::new(1.0, 0.0), 1),
                    den: Polynomial::one(),
                })
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Frac::constant(Complex64::new(0.0, 1.0)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
            None => self.error("unexpected end of input"),
        }
    }

    fn number(&mut self) -> Result<Frac, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || c == b'.') {
            self.pos += 1;
        }
        if self.peek().is_some_and(|c| c == b'e' || c == b'E') {
            let save = self.pos;
            self.pos += 1;
            if self.peek().is_some_and(|c| c == b'+' || c == b'-') {
                self.pos += 1;
            }
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
            } else {
                self.pos = save;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        match text.parse::<f64>() {
            Ok(x) => Ok(Frac::constant(Complex64::new(x, 0.0))),
            Err(_) => {
                self.pos = start;
                self.error(format!("bad number '{text}'"))
            }
        }
    }
}

/// Parses a dilatation expression into a rational map.
pub fn parse_omega(spec: &str) -> Result<RationalMap<f64>, ParseError> {
    let cleaned: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser {
        src: cleaned.as_bytes(),
        pos: 0,
    };
    let frac = p.expr()?;
    if p.pos != p.src.len() {
        return p.error("trailing input");
    }
    check_moebius_shape(&frac)?;
    Ok(RationalMap::new(frac.num, frac.den, 0, Complex64::new(1.0, 0.0))?)
}

/// `(z + A)/(1 + B z)` must have `B = conj(A)`.
fn check_moebius_shape(f: &Frac) -> Result<(), ParseError> {
    let (n, d) = (f.num.trimmed(), f.den.trimmed());
    if n.degree() != 1 || d.degree() != 1 || n.coeff(1).norm() == 0.0 {
        return Ok(());
    }
    let s = n.coeff(1).inv();
    let (n, d) = (n.scale(s), d.scale(s));
    if (d.coeff(0) - Complex64::new(1.0, 0.0)).norm() > MOEBIUS_CONJ_TOL {
        return Ok(());
    }
    let (a, b) = (n.coeff(0), d.coeff(1));
    if (b - a.conj()).norm() > MOEBIUS_CONJ_TOL {
        return Err(ParseError::NotMoebius {
            a: [a.re, a.im],
            b: [b.re, b.im],
        });
    }
    Ok(())
}

/// Recognises `e^{iθ} zⁿ` (unimodular coefficient), returning `(θ, n)`.
pub fn as_unit_monomial(r: &RationalMap<f64>) -> Option<(f64, u32)> {
    if r.is_zero() || r.num().degree() != 0 || r.den().degree() != 0 || r.power() == 0 {
        return None;
    }
    let c = r.unit() * r.num().coeff(0) / r.den().coeff(0);
    ((c.norm() - 1.0).abs() < 1e-12).then(|| (c.arg(), r.power()))
}

/// Recognises `(z + a)/(1 + ā z)` with `|a| < 1`, returning `a`.
pub fn as_moebius(r: &RationalMap<f64>) -> Option<Complex64> {
    let (p, q) = r.to_fraction();
    let (p, q) = (p.trimmed(), q.trimmed());
    if p.degree() != 1 || q.degree() != 1 {
        return None;
    }
    let s = p.coeff(1).inv();
    let (p, q) = (p.scale(s), q.scale(s));
    let a = p.coeff(0);
    let ok = (q.coeff(0) - Complex64::new(1.0, 0.0)).norm() < 1e-12
        && (q.coeff(1) - a.conj()).norm() < 1e-12
        && a.norm() < 1.0;
    ok.then_some(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(spec: &str, want: &RationalMap<f64>) {
        let got = parse_omega(spec).unwrap();
        for k in 0..16 {
            let z = Complex64::from_polar(0.7, 0.4 * k as f64);
            assert!((got.eval(z).unwrap() - want.eval(z).unwrap()).norm() < 1e-14, "{spec}");
        }
    }

    #[test]
    fn monomials() {
        close("z", &RationalMap::monomial(c(1.0, 0.0), 1));
        close("-z^2", &RationalMap::monomial(c(-1.0, 0.0), 2));
        close("(0.3+0.2i)*z^3", &RationalMap::monomial(c(0.3, 0.2), 3));
        close("0.5i z", &RationalMap::monomial(c(0.0, 0.5), 1));
        close("1e-1*z", &RationalMap::monomial(c(0.1, 0.0), 1));
        assert!(parse_omega("0").unwrap().is_zero());
        assert_eq!(as_unit_monomial(&parse_omega("-z^3").unwrap()).map(|x| x.1), Some(3));
        assert!((as_unit_monomial(&parse_omega("i*z").unwrap()).unwrap().0 - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(as_unit_monomial(&parse_omega("0.5*z").unwrap()).is_none());
    }

    #[test]
    fn moebius() {
        let r = parse_omega("(z+0.5)/(1+0.5*z)").unwrap();
        close("(z+0.5)/(1+0.5*z)", &RationalMap::moebius(c(0.5, 0.0)));
        assert_eq!(as_moebius(&r), Some(c(0.5, 0.0)));
        let r = parse_omega("(z + (0.2+0.3i)) / (1 + (0.2-0.3i) z)").unwrap();
        assert!((as_moebius(&r).unwrap() - c(0.2, 0.3)).norm() < 1e-15);
        assert!(matches!(
            parse_omega("(z+0.5)/(1+0.4*z)"),
            Err(ParseError::NotMoebius { .. })
        ));
    }

    #[test]
    fn general_ratio() {
        let want = RationalMap::new(
            Polynomial::from_real(&[0.0, 0.0, 1.0]).unwrap(),
            Polynomial::from_real(&[2.0, 1.0]).unwrap(),
            0,
            c(1.0, 0.0),
        )
        .unwrap();
        close("z^2/(2+z)", &want);
    }

    #[test]
    fn syntax_errors() {
        for bad in ["", "z+", "(z", "z^x", "w", "z)", "1/0"] {
            assert!(parse_omega(bad).is_err(), "{bad}");
        }
    }
}
