use std::cmp::Ordering;
use std::str::FromStr;

use super::{FieldValue, Record};
use crate::error::{Error, Result};
use crate::units::parse_quantity;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Comparison {
    fn holds(self, ord: Ordering) -> bool {
        match self {
            Comparison::Eq => ord == Ordering::Equal,
            Comparison::Ne => ord != Ordering::Equal,
            Comparison::Lt => ord == Ordering::Less,
            Comparison::Le => ord != Ordering::Greater,
            Comparison::Gt => ord == Ordering::Greater,
            Comparison::Ge => ord != Ordering::Less,
        }
    }
}

/// `field <op> value`, e.g. `sampling_frequency>=1GSPS` or `sight=NLOS`.
///
/// Quantity fields require a unit suffix on the value; absent cells never
/// match.
#[derive(Debug, Clone, PartialEq)]
pub struct Filter {
    pub field: String,
    pub comparison: Comparison,
    pub value: String,
}

impl Filter {
    pub fn new(field: &str, comparison: Comparison, value: &str) -> Self {
        Filter {
            field: field.to_string(),
            comparison,
            value: value.to_string(),
        }
    }

    fn matches<T: Record>(&self, entry: &T) -> Result<bool> {
        let actual = entry
            .field(&self.field)
            .ok_or_else(|| unknown::<T>(&self.field))?;
        let ord = match actual {
            FieldValue::Absent => return Ok(false),
            FieldValue::Quantity(v, dim) => {
                let rhs = parse_quantity(&self.value, dim)?;
                v.partial_cmp(&rhs)
            }
            FieldValue::Number(v) => {
                let rhs: f64 = self.value.trim().parse().map_err(|_| {
                    Error::Filter(format!(
                        "{}: field {} is numeric, {:?} is not a number",
                        self, self.field, self.value
                    ))
                })?;
                v.partial_cmp(&rhs)
            }
            FieldValue::Text(s) => Some(s.as_str().cmp(self.value.trim())),
        };
        Ok(ord.is_some_and(|o| self.comparison.holds(o)))
    }
}

impl std::fmt::Display for Filter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let op = match self.comparison {
            Comparison::Eq => "=",
            Comparison::Ne => "!=",
            Comparison::Lt => "<",
            Comparison::Le => "<=",
            Comparison::Gt => ">",
            Comparison::Ge => ">=",
        };
        write!(f, "{}{}{}", self.field, op, self.value)
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // two-character operators first
        const OPS: [(&str, Comparison); 7] = [
            (">=", Comparison::Ge),
            ("<=", Comparison::Le),
            ("!=", Comparison::Ne),
            ("==", Comparison::Eq),
            ("=", Comparison::Eq),
            (">", Comparison::Gt),
            ("<", Comparison::Lt),
        ];
        let (at, op, cmp) = OPS
            .iter()
            .filter_map(|&(op, cmp)| s.find(op).map(|at| (at, op, cmp)))
            .min_by_key(|&(at, op, _)| (at, std::cmp::Reverse(op.len())))
            .ok_or_else(|| Error::Filter(s.to_string()))?;
        let field = s[..at].trim();
        let value = s[at + op.len()..].trim();
        if field.is_empty() || value.is_empty() {
            return Err(Error::Filter(s.to_string()));
        }
        Ok(Filter::new(field, cmp, value))
    }
}

fn unknown<T: Record>(field: &str) -> Error {
    Error::UnknownField {
        field: field.to_string(),
        known: T::FIELDS.join(", "),
    }
}

fn check_field<T: Record>(field: &str) -> Result<()> {
    if T::FIELDS.contains(&field) || T::SCHEMA.contains(&field) {
        Ok(())
    } else {
        Err(unknown::<T>(field))
    }
}

/// Entries satisfying every filter, in their original order.
pub fn query<T: Record>(entries: &[T], filters: &[Filter]) -> Result<Vec<T>> {
    for f in filters {
        check_field::<T>(&f.field)?;
    }
    let mut out = Vec::new();
    for entry in entries {
        let mut keep = true;
        for f in filters {
            if !f.matches(entry)? {
                keep = false;
                break;
            }
        }
        if keep {
            out.push(entry.clone());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Min,
    Max,
}

/// The entry with the smallest or largest `field`; the first one wins ties.
/// Entries with an absent value are skipped.
pub fn select<T: Record>(entries: &[T], field: &str, extreme: Extreme) -> Result<Option<T>> {
    check_field::<T>(field)?;
    let mut best: Option<(&T, FieldValue)> = None;
    for entry in entries {
        let value = entry.field(field).ok_or_else(|| unknown::<T>(field))?;
        if value == FieldValue::Absent {
            continue;
        }
        let better = match &best {
            None => true,
            Some((_, current)) => {
                let ord = compare(&value, current);
                match extreme {
                    Extreme::Min => ord == Some(Ordering::Less),
                    Extreme::Max => ord == Some(Ordering::Greater),
                }
            }
        };
        if better {
            best = Some((entry, value));
        }
    }
    Ok(best.map(|(e, _)| e.clone()))
}

fn compare(a: &FieldValue, b: &FieldValue) -> Option<Ordering> {
    match (a, b) {
        (FieldValue::Quantity(x, _), FieldValue::Quantity(y, _))
        | (FieldValue::Number(x), FieldValue::Number(y)) => x.partial_cmp(y),
        (FieldValue::Text(x), FieldValue::Text(y)) => Some(x.cmp(y)),
        _ => None,
    }
}
