//! JSON instance and solution files.
//!
//! Every number is an exact rational written as a string, either an integer
//! (`"3"`, `"-2"`) or a fraction `"p/q"` with `q > 0`. Bare JSON integers are
//! accepted on input for convenience; floats are rejected.
//!
//! ```json
//! {
//!   "mode": "one_sided",
//!   "terrain": [["0", "0"], ["4", "3"], ["8", "0"]],
//!   "points": ["1/2", "6"],
//!   "left_guards": ["0"],
//!   "right_guards": ["8"],
//!   "both_guards": [],
//!   "weights": { "left": ["2"], "right": ["3/2"] }
//! }
//! ```

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use terrain_guard::algos::{Guard, Mode, Pick};
use terrain_guard::{ExactInstance, ExactSolution, ExactTerrain, Rational, Side};

use crate::error::{CliError, CliResult};

/// An exact rational as it appears in files.
#[derive(Clone, Debug, PartialEq)]
pub struct Rat(pub Rational);

impl Rat {
    pub fn parse(text: &str) -> Result<Rational, String> {
        let text = text.trim();
        let bad = || format!("{text:?} is not an integer or a fraction p/q with q > 0");
        let digits = |s: &str, signed: bool| {
            let body = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
            !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
        };
        match text.split_once('/') {
            Some((p, q)) if digits(p, true) && digits(q, false) => {
                if q.bytes().all(|b| b == b'0') {
                    return Err(format!("{text:?} has a zero denominator"));
                }
                Rational::from_str(text).map_err(|_| bad())
            }
            None if digits(text, true) => Rational::from_str(text).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RatVisitor;

        impl Visitor<'_> for RatVisitor {
            type Value = Rat;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string such as \"3\" or \"7/3\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
                Rat::parse(v).map(Rat).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
                Ok(Rat(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
                Ok(Rat(Rational::from_integer(v.into())))
            }
        }

        d.deserialize_any(RatVisitor)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Weights {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<Rat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<Rat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub both: Option<Vec<Rat>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub mode: String,
    pub terrain: Vec<(Rat, Rat)>,
    #[serde(default)]
    pub points: Vec<Rat>,
    #[serde(default)]
    pub left_guards: Vec<Rat>,
    #[serde(default)]
    pub right_guards: Vec<Rat>,
    #[serde(default)]
    pub both_guards: Vec<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Weights>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> CliResult<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// One field per line, each value on a single line.
    pub fn to_json(&self) -> String {
        let mut fields = vec![
            ("mode", compact(&self.mode)),
            ("terrain", compact(&self.terrain)),
            ("points", compact(&self.points)),
            ("left_guards", compact(&self.left_guards)),
            ("right_guards", compact(&self.right_guards)),
            ("both_guards", compact(&self.both_guards)),
        ];
        if let Some(w) = &self.weights {
            fields.push(("weights", compact(w)));
        }
        let body: Vec<String> = fields.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
        format!("{{\n{}\n}}\n", body.join(",\n"))
    }

    pub fn from_instance(inst: &ExactInstance) -> Self {
        let xs = |gs: &[Guard<Rational>]| gs.iter().map(|g| Rat(g.at.x().clone())).collect::<Vec<_>>();
        let ws = |gs: &[Guard<Rational>]| (!gs.is_empty()).then(|| gs.iter().map(|g| Rat(g.weight.clone())).collect());
        let weights = Weights { left: ws(&inst.left_guards), right: ws(&inst.right_guards), both: ws(&inst.both_guards) };
        let any_weights = weights != Weights::default();
        InstanceFile {
            mode: inst.mode.as_str().to_string(),
            terrain: inst.terrain.vertices().iter().map(|v| (Rat(v.x().clone()), Rat(v.y().clone()))).collect(),
            points: inst.points.iter().map(|p| Rat(p.x().clone())).collect(),
            left_guards: xs(&inst.left_guards),
            right_guards: xs(&inst.right_guards),
            both_guards: xs(&inst.both_guards),
            weights: any_weights.then_some(weights),
        }
    }

    pub fn to_instance(&self) -> CliResult<ExactInstance> {
        let mode = Mode::from_str(&self.mode).map_err(|m| CliError::invalid("mode", m))?;
        let terrain = ExactTerrain::new(self.terrain.iter().map(|(x, y)| (x.0.clone(), y.0.clone())))?;
        let on = |field: &str, i: usize, x: &Rat| {
            terrain.point_on(x.0.clone()).map_err(|e| CliError::invalid(format!("{field}[{i}]"), e.to_string()))
        };
        let points = self.points.iter().enumerate().map(|(i, x)| on("points", i, x)).collect::<CliResult<Vec<_>>>()?;
        let weights = self.weights.clone().unwrap_or_default();
        let guards = |field: &str, xs: &[Rat], ws: &Option<Vec<Rat>>| -> CliResult<Vec<Guard<Rational>>> {
            if let Some(ws) = ws {
                if ws.len() != xs.len() {
                    return Err(CliError::invalid(
                        format!("weights.{}", field.trim_end_matches("_guards")),
                        format!("{} weights for {} guards", ws.len(), xs.len()),
                    ));
                }
            }
            xs.iter()
                .enumerate()
                .map(|(i, x)| {
                    let w = ws.as_ref().map_or_else(|| Rational::from_integer(1.into()), |ws| ws[i].0.clone());
                    Ok(Guard::new(on(field, i, x)?, w))
                })
                .collect()
        };
        let left = guards("left_guards", &self.left_guards, &weights.left)?;
        let right = guards("right_guards", &self.right_guards, &weights.right)?;
        let both = guards("both_guards", &self.both_guards, &weights.both)?;
        Ok(ExactInstance::new(terrain, mode, points, left, right, both)?)
    }
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("file values always serialize")
}

pub fn parse_instance(text: &str) -> CliResult<ExactInstance> {
    InstanceFile::from_json(text)?.to_instance()
}

pub fn serialize_instance(inst: &ExactInstance) -> String {
    InstanceFile::from_instance(inst).to_json()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PickEntry {
    pub x: Rat,
    pub side: String,
}

/// A list of chosen guards, as written by `solve --out` and read by `verify`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub picks: Vec<PickEntry>,
}

impl SolutionFile {
    pub fn from_solution(sol: &ExactSolution) -> Self {
        SolutionFile {
            picks: sol.picks.iter().map(|k| PickEntry { x: Rat(k.guard.x().clone()), side: k.side.as_str().to_string() }).collect(),
        }
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("solution files always serialize") + "\n"
    }

    /// Resolves the picks against an instance. The cost charges each pick
    /// the weight of the listed guard it uses (one per unlisted vertex in
    /// continuous mode).
    pub fn to_solution(&self, inst: &ExactInstance) -> CliResult<ExactSolution> {
        let mut items = Vec::new();
        for (i, entry) in self.picks.iter().enumerate() {
            let field = format!("picks[{i}]");
            let side = Side::from_str(&entry.side).map_err(|e| CliError::invalid(&field, e.to_string()))?;
            let at = inst.terrain.point_on(entry.x.0.clone()).map_err(|e| CliError::invalid(&field, e.to_string()))?;
            let find = |gs: &[Guard<Rational>]| gs.iter().find(|g| g.at.same_x(&at)).map(|g| g.weight.clone());
            let weight = match side {
                Side::Left => find(&inst.left_guards).or_else(|| find(&inst.both_guards)),
                Side::Right => find(&inst.right_guards).or_else(|| find(&inst.both_guards)),
                Side::Both => find(&inst.both_guards),
            };
            let weight = match (weight, inst.mode) {
                (Some(w), _) => w,
                (None, Mode::Continuous) => Rational::from_integer(1.into()),
                (None, _) => return Err(CliError::invalid(field, format!("no {side} guard at x = {}", entry.x.0))),
            };
            items.push((Pick::new(at, side), weight));
        }
        Ok(ExactSolution::from_weighted(items))
    }
}
