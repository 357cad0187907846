//! Subcommand definitions and dispatch.

use std::path::PathBuf;

use clap::{Args, Subcommand};
use modclosure::closure::{
    analytic_spread_monomial_ideal, analytic_spread_nnd_module, arc_pullback_test, closure_nnd, closure_via_minors,
    decomposable_check, integral_membership, jm_ideal, nnd_check_ideal, nnd_check_module, ClosureResult, Decomposable,
    NNDReport, Verdict,
};
use modclosure::modtools::{fitting_ideal, rank, reduction_matrix_ap, row_ideal, vertex_alternation_reduction, z_module};
use modclosure::multiplicity::{
    buchsbaum_rim, delta, hs_multiplicity, ideal_reduction_check, mixed_multiplicity, RandomSpec, DEFAULT_REDUCTION_CAP,
};
use modclosure::polyhedra::{
    compact_faces_max_dim, covolume, newton_polyhedron_of_ideal, term_ideal, Covolume, MonomialIdeal, NewtonPolyhedron,
};
use modclosure::{Ideal, Ring};
use serde_json::{json, Value};

use crate::problem::{Problem, ProblemFile, RandomFields};
use crate::{registry, CliError, Exit, Outcome};

#[derive(Args, Clone, Debug)]
pub struct Input {
    /// Problem file (JSON).
    #[arg(long = "in", value_name = "FILE")]
    pub path: PathBuf,
}

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// Rank of the matrix over the fraction field.
    Rank(Input),
    /// Fitting ideal I_i(M) of i-minors; i defaults to the rank.
    Fitting {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Newton polyhedron of I_i(M); i defaults to the rank.
    Newton {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Term ideal of the Newton polyhedron of I_i(M).
    TermIdeal {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Generators of Z(M) = {h : rank [M|h] = rank M}.
    Zmod(Input),
    /// Newton non-degeneracy of the module, or of I_i(M) with --index.
    Nnd {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        index: Option<usize>,
    },
    /// The ideal J_M and its monomial part.
    Jm(Input),
    /// Integral closure; uses the supplied ideal when present, the NND engine otherwise.
    Closure {
        #[command(flatten)]
        input: Input,
        /// Name of the supplied closure of I_r(M).
        #[arg(long, default_value = "K")]
        ideal: String,
    },
    /// Is h integral over M?
    Membership {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "K")]
        ideal: String,
    },
    /// Integral decomposability through e(M_L) = delta(M_L).
    Decomposable(Input),
    /// Analytic spread of a monomial ideal (one row) or of an NND module.
    Spread(Input),
    /// Hilbert-Samuel multiplicity of a supplied ideal, the row ideal, or I_i(M).
    Mult {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Mixed multiplicity of the row ideals (one row per variable).
    Mixed(Input),
    /// delta(M) = sum of mixed multiplicities of the row ideals.
    Delta(Input),
    /// Buchsbaum-Rim multiplicity.
    Brim(Input),
    /// Reduction checks for the row ideal I of a one-row matrix.
    Reduce {
        #[command(flatten)]
        input: Input,
        /// Supplied ideal L; checks I L^k = L^{k+1}.
        #[arg(long)]
        target: Option<String>,
        /// Also build A^p(g1, g2) from the vertex-alternation pair.
        #[arg(long)]
        p: Option<usize>,
    },
    /// Arc pull-back test for h along phi.
    Arc(Input),
    /// Runs a built-in worked example and compares with its expected results.
    Example {
        id: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

/// Runs `cmd`; CLI random flags override the problem file's.
pub fn run(cmd: &Command, flags: RandomFields) -> Outcome {
    match dispatch(cmd, flags) {
        Ok(o) => o,
        Err(e) => Outcome::from_error(&e),
    }
}

fn load(input: &Input) -> Result<Problem, CliError> {
    ProblemFile::read(&input.path)?.load()
}

fn spec(p: &Problem, flags: RandomFields) -> Result<RandomSpec, CliError> {
    p.random.overridden_by(flags).resolve()
}

fn fitting_index(p: &Problem, index: Option<usize>) -> Result<usize, CliError> {
    match index {
        Some(i) => Ok(i),
        None => match rank(&p.matrix) {
            0 => Err(CliError::Input("the matrix has rank 0".into())),
            r => Ok(r),
        },
    }
}

fn gens(i: &Ideal) -> Value {
    json!(i.to_strings())
}

fn monomial_gens(i: &MonomialIdeal, ring: &Ring) -> Result<Value, CliError> {
    Ok(gens(&i.to_ideal(ring)?))
}

fn polyhedron(p: &NewtonPolyhedron) -> Value {
    let cov = match covolume(p) {
        Covolume::Finite(v) => v.to_string(),
        Covolume::Infinite => "infinite".into(),
    };
    let mut vertices: Vec<Vec<u32>> = p.vertices().iter().map(|v| v.0.clone()).collect();
    vertices.sort();
    json!({
        "vertices": vertices,
        "covolume": cov,
        "compact_faces_max_dim": compact_faces_max_dim(p),
    })
}

fn nnd_summary(r: &NNDReport) -> Outcome {
    let report = serde_json::to_value(r).expect("serializable");
    match r.verdict {
        Verdict::Nondegenerate => Outcome::ok(report, "Newton non-degenerate"),
        Verdict::Degenerate => Outcome::verdict(report, "Newton degenerate", false),
        Verdict::NotApplicable => Outcome {
            report,
            summary: "Newton non-degeneracy not applicable".into(),
            exit: Exit::NotCertified,
        },
    }
}

fn closure_report(r: &ClosureResult) -> Value {
    json!({
        "closure": r.generators.to_strings(),
        "K": gens(&r.k),
        "provenance": r.provenance,
    })
}

/// Supplied ideal `name` when present, the NND closure otherwise.
fn closure_for(p: &Problem, name: &str) -> Result<ClosureResult, CliError> {
    match p.ideals.get(name) {
        Some(k) => Ok(closure_via_minors(&p.matrix, k)?),
        None => Ok(closure_nnd(&p.matrix)?),
    }
}

fn one_row_ideal(p: &Problem) -> Result<Ideal, CliError> {
    if p.matrix.nrows() != 1 {
        return Err(CliError::Input(format!(
            "this command needs a one-row matrix, got {} rows",
            p.matrix.nrows()
        )));
    }
    Ok(row_ideal(&p.matrix, 0)?)
}

fn dispatch(cmd: &Command, flags: RandomFields) -> Result<Outcome, CliError> {
    match cmd {
        Command::Rank(input) => {
            let p = load(input)?;
            let r = rank(&p.matrix);
            Ok(Outcome::ok(json!({ "rank": r }), format!("rank {r}")))
        }
        Command::Fitting { input, index } => {
            let p = load(input)?;
            let i = fitting_index(&p, *index)?;
            let f = fitting_ideal(&p.matrix, i);
            Ok(Outcome::ok(
                json!({ "index": i, "generators": gens(&f) }),
                format!("I_{i}(M) has {} generators", f.gens().len()),
            ))
        }
        Command::Newton { input, index } => {
            let p = load(input)?;
            let i = fitting_index(&p, *index)?;
            let poly = newton_polyhedron_of_ideal(&fitting_ideal(&p.matrix, i))?;
            let mut report = polyhedron(&poly);
            report["index"] = json!(i);
            Ok(Outcome::ok(report, format!("{} vertices", poly.vertices().len())))
        }
        Command::TermIdeal { input, index } => {
            let p = load(input)?;
            let i = fitting_index(&p, *index)?;
            let poly = newton_polyhedron_of_ideal(&fitting_ideal(&p.matrix, i))?;
            let t = term_ideal(&poly);
            Ok(Outcome::ok(
                json!({ "index": i, "generators": monomial_gens(&t, &p.ring)? }),
                format!("term ideal with {} generators", t.gens().len()),
            ))
        }
        Command::Zmod(input) => {
            let p = load(input)?;
            let z = z_module(&p.matrix);
            Ok(Outcome::ok(
                json!({ "z_module": z.to_strings() }),
                format!("Z(M) with {} generators", z.ncols()),
            ))
        }
        Command::Nnd { input, index } => {
            let p = load(input)?;
            let r = match index {
                Some(i) => nnd_check_ideal(&fitting_ideal(&p.matrix, *i))?,
                None if p.matrix.nrows() == 1 => nnd_check_ideal(&row_ideal(&p.matrix, 0)?)?,
                None => nnd_check_module(&p.matrix)?,
            };
            Ok(nnd_summary(&r))
        }
        Command::Jm(input) => {
            let p = load(input)?;
            let (j, j0) = jm_ideal(&p.matrix)?;
            Ok(Outcome::ok(
                json!({ "J_M": gens(&j), "J_M0": monomial_gens(&j0, &p.ring)? }),
                "J_M computed",
            ))
        }
        Command::Closure { input, ideal } => {
            let p = load(input)?;
            let r = closure_for(&p, ideal)?;
            Ok(Outcome::ok(
                closure_report(&r),
                format!("closure with {} generators", r.generators.ncols()),
            ))
        }
        Command::Membership { input, ideal } => {
            let p = load(input)?;
            let h = p.h()?;
            let k = match p.ideals.get(ideal.as_str()) {
                Some(k) => k.clone(),
                None => closure_nnd(&p.matrix)?.k,
            };
            let member = integral_membership(h, &p.matrix, &k)?;
            Ok(Outcome::verdict(
                json!({ "member": member }),
                if member { "h is integral over M" } else { "h is not integral over M" },
                member,
            ))
        }
        Command::Decomposable(input) => {
            let p = load(input)?;
            let r = decomposable_check(&p.matrix, &spec(&p, flags)?)?;
            let report = serde_json::to_value(&r).expect("serializable");
            Ok(match r.verdict {
                Decomposable::Yes => Outcome::ok(report, "integrally decomposable"),
                Decomposable::No => Outcome::verdict(report, "not integrally decomposable", false),
                Decomposable::NotApplicable => Outcome {
                    report,
                    summary: "decomposability not applicable".into(),
                    exit: Exit::NotCertified,
                },
            })
        }
        Command::Spread(input) => {
            let p = load(input)?;
            let l = if p.matrix.nrows() == 1 {
                let i = one_row_ideal(&p)?;
                let mono = MonomialIdeal::from_ideal(&i)
                    .ok_or_else(|| CliError::Input("a one-row spread needs a monomial ideal".into()))?;
                analytic_spread_monomial_ideal(&mono)?
            } else {
                analytic_spread_nnd_module(&p.matrix)?
            };
            Ok(Outcome::ok(json!({ "spread": l }), format!("analytic spread {l}")))
        }
        Command::Mult { input, ideal, index } => {
            let p = load(input)?;
            let rs = spec(&p, flags)?;
            let i = match (ideal, index) {
                (Some(name), _) => p.ideal(name)?.clone(),
                (None, Some(i)) => fitting_ideal(&p.matrix, *i),
                (None, None) if p.matrix.nrows() == 1 => one_row_ideal(&p)?,
                (None, None) => fitting_ideal(&p.matrix, fitting_index(&p, None)?),
            };
            let v = hs_multiplicity(&i, &rs)?;
            let summary = format!("e = {}", v.value);
            Ok(Outcome::ok(serde_json::to_value(&v).expect("serializable"), summary))
        }
        Command::Mixed(input) => {
            let p = load(input)?;
            let n = p.ring.nvars();
            if p.matrix.nrows() != n {
                return Err(CliError::Input(format!(
                    "mixed multiplicity needs one row per variable: {n} rows expected, got {}",
                    p.matrix.nrows()
                )));
            }
            let rows = (0..n).map(|i| row_ideal(&p.matrix, i)).collect::<Result<Vec<_>, _>>()?;
            let v = mixed_multiplicity(&rows, &spec(&p, flags)?)?;
            let summary = format!("mixed multiplicity {}", v.value);
            Ok(Outcome::ok(serde_json::to_value(&v).expect("serializable"), summary))
        }
        Command::Delta(input) => {
            let p = load(input)?;
            let v = delta(&p.matrix, &spec(&p, flags)?)?;
            let summary = format!("delta = {}", v.value);
            Ok(Outcome::ok(serde_json::to_value(&v).expect("serializable"), summary))
        }
        Command::Brim(input) => {
            let p = load(input)?;
            let v = buchsbaum_rim(&p.matrix, &spec(&p, flags)?)?;
            let summary = format!("e(M) = {}", v.value);
            Ok(Outcome::ok(serde_json::to_value(&v).expect("serializable"), summary))
        }
        Command::Reduce { input, target, p: power } => {
            let p = load(input)?;
            let i = one_row_ideal(&p)?;
            if let Some(name) = target {
                let l = p.ideal(name)?;
                let k = ideal_reduction_check(&i, l, DEFAULT_REDUCTION_CAP)?;
                return Ok(Outcome::verdict(
                    json!({ "reduction": k.is_some(), "k": k }),
                    match k {
                        Some(k) => format!("I L^{k} = L^{}", k + 1),
                        None => format!("no k <= {DEFAULT_REDUCTION_CAP} with I L^k = L^(k+1)"),
                    },
                    k.is_some(),
                ));
            }
            let mono = MonomialIdeal::from_ideal(&i)
                .ok_or_else(|| CliError::Input("vertex alternation needs a monomial ideal".into()))?;
            let (g1, g2) = vertex_alternation_reduction(&mono, &p.ring)?;
            let mut report = json!({ "g1": g1.to_string(), "g2": g2.to_string() });
            if let Some(q) = power {
                let a = reduction_matrix_ap(&[g1, g2], *q)?;
                report["A"] = json!(a.to_strings());
            }
            Ok(Outcome::ok(report, "vertex-alternation reduction"))
        }
        Command::Arc(input) => {
            let p = load(input)?;
            let r = arc_pullback_test(&p.matrix, p.h()?, p.phi()?)?;
            let report = serde_json::to_value(&r).expect("serializable");
            Ok(Outcome::verdict(
                report,
                if r.member { "arc test passes" } else { "arc test rejects h" },
                r.member,
            ))
        }
        Command::Example { id, list } => {
            if *list || id.is_none() {
                let ids: Vec<&str> = registry::cases().iter().map(|c| c.id).collect();
                return Ok(Outcome::ok(json!({ "examples": ids }), ids.join(" ")));
            }
            let id = id.as_deref().unwrap_or_default();
            let case = registry::find(id).ok_or_else(|| CliError::Input(format!("unknown example `{id}`")))?;
            let rs = case.problem.random.unwrap_or_default().overridden_by(flags).resolve()?;
            Ok(registry::run_case(&case, &rs))
        }
    }
}
