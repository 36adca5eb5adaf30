use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::ast::{Expr, Func, Script, Stmt};
use super::parser::parse_script;
use super::Pos;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::invariants;
use crate::poly::Polynomial;
use crate::presentation::RingPresentation;
use crate::text::{build_ring, eval_poly_expr};

#[derive(Clone, Debug)]
pub enum Value {
    Ideal(Ideal),
    Int(u64),
    OptInt(Option<u64>),
    Bool(bool),
    Poly(Polynomial),
    IntList(Vec<u64>),
}

impl Value {
    fn same(&self, other: &Value) -> Result<bool> {
        Ok(match (self, other) {
            (Value::Ideal(a), Value::Ideal(b)) => a.equals(b)?,
            (Value::Bool(a), Value::Bool(b)) => a == b,
            (Value::Poly(a), Value::Poly(b)) => a == b,
            (Value::IntList(a), Value::IntList(b)) => a == b,
            (a, b) => match (a.as_opt_int(), b.as_opt_int()) {
                (Some(x), Some(y)) => x == y,
                _ => return Err(Error::Eval(format!("cannot compare {a} with {b}"))),
            },
        })
    }

    fn as_opt_int(&self) -> Option<Option<u64>> {
        match self {
            Value::Int(n) => Some(Some(*n)),
            Value::OptInt(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Ideal(i) => write!(f, "{i}"),
            Value::Int(n) | Value::OptInt(Some(n)) => write!(f, "{n}"),
            Value::OptInt(None) => write!(f, "none"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::IntList(v) => {
                let parts: Vec<String> = v.iter().map(u64::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub pos: Pos,
    /// The check statement as written back by the printer.
    pub statement: String,
    pub passed: bool,
    /// Left-hand value, and the right-hand value when there is one.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScriptOutcome {
    /// One line per `print`.
    pub output: Vec<String>,
    pub checks: Vec<CheckOutcome>,
}

impl ScriptOutcome {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Evaluates parsed scripts statement by statement.
#[derive(Default)]
pub struct Interpreter {
    rings: HashMap<String, Arc<RingPresentation>>,
    active: Option<Arc<RingPresentation>>,
    ideals: HashMap<String, Ideal>,
    /// Seed for `depth`.
    pub seed: u64,
}

impl Interpreter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn run(&mut self, script: &Script) -> Result<ScriptOutcome> {
        let mut outcome = ScriptOutcome::default();
        for st in &script.statements {
            self.statement(&st.stmt, st.pos, &mut outcome)
                .map_err(|e| Error::Eval(format!("{}: {e}", st.pos)))?;
        }
        Ok(outcome)
    }

    fn statement(&mut self, stmt: &Stmt, pos: Pos, out: &mut ScriptOutcome) -> Result<()> {
        match stmt {
            Stmt::Ring { name, spec } => {
                let pres = build_ring(spec)?;
                self.rings.insert(name.clone(), pres.clone());
                self.active = Some(pres);
            }
            Stmt::Use(name) => {
                let pres = self.rings.get(name).ok_or_else(|| Error::Eval(format!("unbound ring `{name}`")))?;
                self.active = Some(pres.clone());
            }
            Stmt::Ideal { name, value } => {
                let Value::Ideal(i) = self.eval(value)? else {
                    return Err(Error::Eval("expected an ideal".into()));
                };
                self.ideals.insert(name.clone(), i);
            }
            Stmt::Print(e) => {
                let v = self.eval(e)?;
                out.output.push(v.to_string());
            }
            Stmt::Check { lhs, rhs } => {
                let l = self.eval(lhs)?;
                let (passed, detail) = match rhs {
                    None => match l {
                        Value::Bool(b) => (b, b.to_string()),
                        other => return Err(Error::Eval(format!("check needs a boolean, got {other}"))),
                    },
                    Some(rhs) => {
                        let r = self.eval(rhs)?;
                        (l.same(&r)?, format!("{l} vs {r}"))
                    }
                };
                out.checks.push(CheckOutcome { pos, statement: stmt.to_string(), passed, detail });
            }
        }
        Ok(())
    }

    fn ring(&self) -> Result<&Arc<RingPresentation>> {
        self.active.as_ref().ok_or_else(|| Error::Eval("no active ring".into()))
    }

    pub fn eval(&self, expr: &Expr) -> Result<Value> {
        let ring = self.ring()?;
        Ok(match expr {
            Expr::Name(n) => Value::Ideal(
                self.ideals.get(n).cloned().ok_or_else(|| Error::Eval(format!("unbound name `{n}`")))?,
            ),
            Expr::Ideal(ps) => {
                let gens = ps.iter().map(|p| eval_poly_expr(ring.poly_ring(), p)).collect::<Result<_>>()?;
                Value::Ideal(Ideal::new(ring, gens)?)
            }
            Expr::MaxIdeal => Value::Ideal(ring.max_ideal()?),
            Expr::Int(n) => Value::Int(*n),
            Expr::Bool(b) => Value::Bool(*b),
            Expr::None => Value::OptInt(None),
            Expr::Poly(p) => Value::Poly(eval_poly_expr(ring.poly_ring(), p)?),
            Expr::Call(f, args) => self.call(*f, args)?,
        })
    }

    fn ideal_arg(&self, e: &Expr) -> Result<Ideal> {
        match self.eval(e)? {
            Value::Ideal(i) => Ok(i),
            other => Err(Error::Eval(format!("expected an ideal, got {other}"))),
        }
    }

    fn int_arg(&self, e: &Expr) -> Result<u64> {
        match e {
            Expr::Int(n) => Ok(*n),
            other => Err(Error::Eval(format!("expected an integer, got {other}"))),
        }
    }

    fn u32_arg(&self, e: &Expr) -> Result<u32> {
        let n = self.int_arg(e)?;
        u32::try_from(n).map_err(|_| Error::Eval(format!("{n} is too large")))
    }

    fn poly_arg(&self, e: &Expr) -> Result<Polynomial> {
        match self.eval(e)? {
            Value::Poly(p) => Ok(p),
            other => Err(Error::Eval(format!("expected a polynomial, got {other}"))),
        }
    }

    fn call(&self, f: Func, args: &[Expr]) -> Result<Value> {
        let ideal = |k: usize| self.ideal_arg(&args[k]);
        Ok(match f {
            Func::Colon => Value::Ideal(ideal(0)?.colon(&ideal(1)?)?),
            Func::Sum => Value::Ideal(ideal(0)?.sum(&ideal(1)?)?),
            Func::Product => Value::Ideal(ideal(0)?.product(&ideal(1)?)?),
            Func::Intersect => Value::Ideal(ideal(0)?.intersect(&ideal(1)?)?),
            Func::Power => Value::Ideal(ideal(0)?.power(self.u32_arg(&args[1])?)?),
            Func::Gb => {
                let i = ideal(0)?;
                let gb = i.basis()?;
                Value::Ideal(Ideal::new(i.presentation(), gb.elements().to_vec())?)
            }
            Func::Length => Value::Int(invariants::length(&ideal(0)?)?),
            Func::RelativeLength => Value::Int(invariants::relative_length(&ideal(0)?, &ideal(1)?)?),
            Func::Socle => Value::Int(invariants::socle(&ideal(0)?)?.length),
            Func::Mu => Value::Int(invariants::min_generators(&ideal(0)?)?),
            Func::Mult => Value::Int(invariants::multiplicity(&ideal(0)?)?),
            Func::Defect => {
                let d = invariants::buchsbaum_defect(&ideal(0)?)?;
                Value::Int(u64::try_from(d).map_err(|_| Error::Eval(format!("negative defect {d}")))?)
            }
            Func::Dim => Value::Int(ideal(0)?.krull_dimension()? as u64),
            Func::Type => Value::Int(invariants::cm_type(&ideal(0)?)?),
            Func::Depth => {
                let trials = self.int_arg(&args[0])? as usize;
                Value::Int(invariants::depth_probe(self.ring()?, trials, self.seed)?.bound as u64)
            }
            Func::Hilbert => {
                let hs = invariants::hilbert_samuel(&ideal(0)?, self.int_arg(&args[1])? as usize)?;
                Value::IntList(hs.colengths)
            }
            Func::Stability => {
                let st = invariants::stability_index(&ideal(0)?, &ideal(1)?, self.u32_arg(&args[2])?)?;
                Value::OptInt(st.index.map(u64::from))
            }
            Func::Equal => Value::Bool(ideal(0)?.equals(&ideal(1)?)?),
            Func::Subset => Value::Bool(ideal(0)?.is_subset(&ideal(1)?)?),
            Func::Member => Value::Bool(ideal(1)?.contains(&self.poly_arg(&args[0])?)?),
            Func::OriginPrimary => Value::Bool(ideal(0)?.is_origin_primary()?),
            Func::Nf => Value::Poly(ideal(1)?.normal_form(&self.poly_arg(&args[0])?)?),
        })
    }
}

/// Parses and runs a script.
pub fn run_script(src: &str) -> Result<ScriptOutcome> {
    let script = parse_script(src)?;
    Interpreter::new().run(&script)
}
