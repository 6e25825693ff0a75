//! A family tag plus expression strings, resolved into a group element.

use sprugnoli::error::{Error, Result};
use sprugnoli::{
    gf, general_inv, general_mul, DoubleTriple, GeneralTuple, Rational, RiordanPair, Series,
    SprugnoliTriple, StretchedPair, TriMatrix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Riordan,
    Stretched,
    Double,
    Sprugnoli,
    General,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Riordan => "riordan",
            Family::Stretched => "stretched",
            Family::Double => "double",
            Family::Sprugnoli => "sprugnoli",
            Family::General => "general",
        }
    }
}

/// Raw command-line slots before expression parsing.
#[derive(Clone, Debug, Default)]
pub struct ElementSpec {
    pub g: Option<String>,
    pub f: Option<String>,
    pub f1: Option<String>,
    pub f2: Option<String>,
    pub f3: Option<String>,
    pub f4: Option<String>,
    pub m: Option<usize>,
}

pub enum Element {
    Riordan(RiordanPair),
    Stretched(StretchedPair),
    Double(DoubleTriple),
    Sprugnoli(SprugnoliTriple),
    General(GeneralTuple),
}

fn missing(flag: &str) -> Error {
    Error::Parse { msg: format!("missing required series flag --{flag}"), at: 0 }
}

fn slot(text: &Option<String>, flag: &str, order: usize) -> Result<Series> {
    let text = text.as_ref().ok_or_else(|| missing(flag))?;
    gf(text, order)
}

impl Element {
    pub fn from_spec(family: Family, spec: &ElementSpec, order: usize) -> Result<Element> {
        match family {
            Family::Riordan => {
                let g = slot(&spec.g, "g", order)?;
                let f = slot(&spec.f, "f", order)?;
                Ok(Element::Riordan(RiordanPair::new(g, f)?))
            }
            Family::Stretched => {
                let g = slot(&spec.g, "g", order)?;
                let xf = slot(&spec.f, "f", order)?;
                Ok(Element::Stretched(StretchedPair::new(g, xf)?))
            }
            Family::Double => {
                let g = slot(&spec.g, "g", order)?;
                let f1 = slot(&spec.f1, "f1", order)?;
                let f2 = slot(&spec.f2, "f2", order)?;
                Ok(Element::Double(DoubleTriple::new(g, f1, f2)?))
            }
            Family::Sprugnoli => {
                let g = slot(&spec.g, "g", order)?;
                let f1 = slot(&spec.f1, "f1", order)?;
                let f2 = slot(&spec.f2, "f2", order)?;
                Ok(Element::Sprugnoli(SprugnoliTriple::new(g, f1, f2)?))
            }
            Family::General => {
                // the period defaults to the highest slot supplied
                let m = spec.m.unwrap_or(if spec.f4.is_some() {
                    4
                } else if spec.f3.is_some() {
                    3
                } else {
                    2
                });
                if !(2..=4).contains(&m) {
                    return Err(Error::Parse {
                        msg: format!("--m must be 2, 3, or 4 (got {m})"),
                        at: 0,
                    });
                }
                let g = slot(&spec.g, "g", order)?;
                let texts = [&spec.f1, &spec.f2, &spec.f3, &spec.f4];
                let names = ["f1", "f2", "f3", "f4"];
                let mut fs = Vec::with_capacity(m - 1);
                for i in 0..m - 1 {
                    fs.push(slot(texts[i], names[i], order)?);
                }
                let fm = slot(texts[m - 1], names[m - 1], order)?;
                Ok(Element::General(GeneralTuple::new(m, g, fs, fm)?))
            }
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Element::Riordan(_) => Family::Riordan,
            Element::Stretched(_) => Family::Stretched,
            Element::Double(_) => Family::Double,
            Element::Sprugnoli(_) => Family::Sprugnoli,
            Element::General(_) => Family::General,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Element::Riordan(p) => p.order(),
            Element::Stretched(p) => p.g().order(),
            Element::Double(t) => t.order(),
            Element::Sprugnoli(t) => t.order(),
            Element::General(t) => t.order(),
        }
    }

    pub fn build(&self, dim: usize) -> Result<TriMatrix> {
        match self {
            Element::Riordan(p) => p.build(dim),
            Element::Stretched(p) => p.build(dim),
            Element::Double(t) => t.build(dim),
            Element::Sprugnoli(t) => t.build(dim),
            Element::General(t) => t.build(dim),
        }
    }

    /// First dim coefficients of the array acting on h.
    pub fn apply(&self, h: &Series, dim: usize) -> Result<Vec<Rational>> {
        let full = match self {
            Element::Riordan(p) => p.apply(h),
            Element::Stretched(p) => p.apply(h),
            Element::Sprugnoli(t) => t.apply(h),
            Element::General(t) => t.apply(h),
            // the double family routes through the matrix action
            Element::Double(t) => {
                let m = t.build(dim)?;
                return Ok(m.mat_vec(&h.coeffs()[..dim]));
            }
        };
        Ok(full.coeffs()[..dim].to_vec())
    }

    pub fn mul_matrix(&self, rhs: &Element, dim: usize) -> Result<TriMatrix> {
        match (self, rhs) {
            (Element::Riordan(a), Element::Riordan(b)) => a.mul(b).build(dim),
            (Element::Double(a), Element::Double(b)) => a.mul(b).build(dim),
            (Element::Sprugnoli(a), Element::Sprugnoli(b)) => a.mul(b).build(dim),
            (Element::General(a), Element::General(b)) => general_mul(a, b, dim),
            (Element::Stretched(_), Element::Stretched(_)) => Err(Error::Membership(
                "stretched arrays do not form a group; no product is defined".into(),
            )),
            _ => Err(Error::Membership(
                "both operands must come from the same family".into(),
            )),
        }
    }

    pub fn inv_matrix(&self, dim: usize) -> Result<TriMatrix> {
        match self {
            Element::Riordan(p) => p.inv().build(dim),
            Element::Double(t) => t.inv().build(dim),
            Element::Sprugnoli(t) => t.inv().build(dim),
            Element::General(t) => Ok(general_inv(t, dim)?.matrix),
            Element::Stretched(_) => Err(Error::Membership(
                "stretched arrays do not form a group; no inverse is defined".into(),
            )),
        }
    }

    /// Stripe period of the family's production matrices.
    pub fn stripe_period(&self) -> usize {
        match self {
            Element::Riordan(_) | Element::Stretched(_) => 1,
            Element::Double(_) | Element::Sprugnoli(_) => 2,
            Element::General(t) => t.period(),
        }
    }
}
