use crate::coxeter::GeneratorId;
use crate::error::{Error, Result};
use crate::garside::GroupElement;
use crate::parabolic::ribbon;

/// Shape of a minimal positive conjugator leaving a positive element with
/// support `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrowType {
    InsideAX,
    CommutingLetter(GeneratorId),
    Ribbon(GeneratorId),
}

impl ArrowType {
    pub fn number(self) -> u8 {
        match self {
            ArrowType::InsideAX => 1,
            ArrowType::CommutingLetter(_) => 2,
            ArrowType::Ribbon(_) => 3,
        }
    }
}

pub fn classify_arrow(v: &GroupElement, label: &GroupElement) -> Result<ArrowType> {
    let ctx = v.context();
    let x = v.support();
    if label.support().is_subset(x) {
        return Ok(ArrowType::InsideAX);
    }
    if let Some(word) = label.positive_word() {
        if let [t] = word[..] {
            if x.iter().all(|s| ctx.spec().commute(s, t)) {
                return Ok(ArrowType::CommutingLetter(t));
            }
        }
        if let Some(&t) = word.first() {
            if *label == ribbon(ctx, x, t) {
                return Ok(ArrowType::Ribbon(t));
            }
        }
    }
    Err(Error::UnclassifiableLabel(format!("{label} leaving {v}")))
}
