//! The `flagcalc` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::cache;
use crate::deformed;
use crate::error::{Error, Result};
use crate::flag::{FlagVariety, GroupData};
use crate::json::JsonInt;
use crate::levi_rep::{LeviSystem, RepEngine};
use crate::lr_oracle::{fulton_check, fulton_sweep, grassmannian_bijection, lagrangian_bijection, Partition, StrictPartition};
use crate::root_system::{RootSystem, Weight};
use crate::schubert::CohomClass;
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "flagcalc", version, about = "Schubert calculus on G/P and Levi tensor invariants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Space {
    /// Group type and rank, e.g. C3
    #[arg(long)]
    pub group: String,
    /// Crossed-out simple roots Δ∖Δ(P), e.g. 2 or 1,3
    #[arg(long, value_delimiter = ',', required = true)]
    pub cross: Vec<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List W^P with length, χ_w, Δ(Q_w) and level dimensions (one JSON object per line)
    Wp {
        #[command(flatten)]
        space: Space,
    },
    /// Expand a product of Schubert classes [X_w] in the Schubert basis
    Product {
        #[command(flatten)]
        space: Space,
        /// Use the deformed product ⊙₀
        #[arg(long)]
        deformed: bool,
        /// Print the expansion as JSON
        #[arg(long)]
        json: bool,
        /// Read the classes as strict partitions of LG(ℓ,2ℓ) (type Cℓ, --cross ℓ)
        #[arg(long, conflicts_with = "partition")]
        strict: bool,
        /// Read the classes as partitions of Gr(r,n) (type A(n−1), --cross r)
        #[arg(long)]
        partition: bool,
        /// Reduced words such as 1,3,2 (use e for the identity), or partitions
        #[arg(required = true, num_args = 1..)]
        words: Vec<String>,
    },
    /// Dimension of tensor invariants
    Invariants(InvariantsArgs),
    /// Check every s-tuple with deformed top coefficient 1 for invariant dimension 1
    Verify {
        #[command(flatten)]
        space: Space,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Do not read or write the structure-constant cache
        #[arg(long)]
        no_cache: bool,
    },
    /// Check c^{nν}_{nλ,nμ} = 1 for n ≤ n_max whenever c^ν_{λ,μ} = 1
    Fulton {
        /// Number of rows r (partitions have at most r parts)
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        /// Sweep all triples in the r × k box instead of checking one
        #[arg(long)]
        sweep: Option<u32>,
        /// λ μ ν as comma-separated parts
        #[arg(num_args = 0..=3)]
        partitions: Vec<String>,
    },
    /// Recompute the reference examples
    Examples,
    /// Cartan matrix, positive roots and ρ
    Roots {
        #[arg(long)]
        group: String,
    },
}

#[derive(Args, Debug)]
pub struct InvariantsArgs {
    #[arg(long)]
    pub group: String,
    /// With --cross, compute Levi invariants of the χ_w of the given words
    #[arg(long, value_delimiter = ',')]
    pub cross: Option<Vec<usize>>,
    /// Scale every weight by n
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Dominant weights in fundamental coordinates (e.g. 6,0), or words with --cross
    #[arg(required = true, num_args = 1..)]
    pub items: Vec<String>,
}

fn parse_weight(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad weight coordinate '{x}' in '{s}'")))
        })
        .collect()
}

fn flag_variety(space: &Space) -> Result<FlagVariety> {
    GroupData::parse(&space.group)?.flag_variety(&space.cross)
}

fn weight_json(w: &Weight) -> Vec<serde_json::Value> {
    w.0.iter()
        .map(|c| {
            if c.is_integer() {
                json!(c.to_integer())
            } else {
                json!(c.to_string())
            }
        })
        .collect()
}

fn emit<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(v)?)?;
    Ok(())
}

fn cmd_wp(space: &Space, out: &mut dyn Write) -> Result<i32> {
    let fv = flag_variety(space)?;
    let levi = &fv.parabolic().levi_simple;
    for w in 0..fv.len() {
        let chi = fv.chi(w)?;
        let chi_levi = deformed::chi_levi(&fv, w)?;
        let row = json!({
            "word": fv.word(w),
            "length": fv.length(w),
            "chi_fund_coords": weight_json(chi),
            "chi_levi": weight_json(&chi_levi),
            "levi_simple": levi,
            "delta_qw": deformed::stabilizer_simple_roots(&fv, w)?.delta_qw,
            "dj": deformed::dj_profile(&fv, w).d,
        });
        emit(out, &row)?;
    }
    Ok(0)
}

fn with_cache<T>(fv: &FlagVariety, enabled: bool, f: impl FnOnce() -> Result<T>) -> Result<T> {
    let dir = if enabled { cache::cache_dir() } else { None };
    if let Some(d) = &dir {
        cache::load(fv, d);
    }
    let r = f()?;
    if let Some(d) = &dir {
        // a cache that cannot be written only costs time on the next run
        let _ = cache::save(fv, d);
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Labels {
    Words,
    Strict,
    Partitions,
}

fn resolve(fv: &FlagVariety, labels: Labels, item: &str) -> Result<usize> {
    match labels {
        Labels::Words => fv.find(item),
        Labels::Strict => lagrangian_bijection(fv, &StrictPartition::parse(item)?),
        Labels::Partitions => {
            let r = *fv.parabolic().crossed.first().unwrap_or(&0);
            let k = fv.group_type().rank + 1 - r;
            grassmannian_bijection(fv, &Partition::parse(item)?, r, k)
        }
    }
}

fn cmd_product(space: &Space, deformed: bool, as_json: bool, labels: Labels, words: &[String], out: &mut dyn Write) -> Result<i32> {
    let fv = flag_variety(space)?;
    let ws = words.iter().map(|w| resolve(&fv, labels, w)).collect::<Result<Vec<_>>>()?;
    let class = with_cache(&fv, true, || {
        let mut acc = CohomClass::basis(ws[0]);
        for &w in &ws[1..] {
            let b = CohomClass::basis(w);
            acc = if deformed {
                deformed::deformed_cup_product(&fv, &acc, &b)?
            } else {
                fv.schubert().cup_product(&acc, &b)?
            };
        }
        Ok(acc)
    })?;
    if as_json {
        let terms: Vec<_> = class
            .terms()
            .map(|(w, c)| json!({"word": fv.word(w), "c": JsonInt(c.clone())}))
            .collect();
        emit(out, &json!({"class": fv.schubert().format_class(&class), "terms": terms}))?;
    } else {
        writeln!(out, "{}", fv.schubert().format_class(&class))?;
    }
    Ok(0)
}

fn cmd_invariants(a: &InvariantsArgs, out: &mut dyn Write) -> Result<i32> {
    match &a.cross {
        None => {
            let g = GroupData::parse(&a.group)?;
            let eng = RepEngine::new((*g.rs).clone());
            let ws = a
                .items
                .iter()
                .map(|s| {
                    let w = parse_weight(s)?;
                    if w.len() != eng.rank() {
                        return Err(Error::Invalid(format!("weight '{s}' needs {} coordinates", eng.rank())));
                    }
                    Ok(w.iter().map(|x| x * a.n as i64).collect())
                })
                .collect::<Result<Vec<_>>>()?;
            writeln!(out, "{}", eng.invariant_dimension(&ws)?)?;
        }
        Some(cross) => {
            let fv = GroupData::parse(&a.group)?.flag_variety(cross)?;
            let ws = a.items.iter().map(|w| fv.find(w)).collect::<Result<Vec<_>>>()?;
            let levi = LeviSystem::from_parabolic(fv.root_system(), fv.parabolic())?;
            let chis = ws.iter().map(|&w| fv.chi(w).cloned()).collect::<Result<Vec<_>>>()?;
            let restricted = chis.iter().map(|c| levi.restrict(c)).collect::<Result<Vec<_>>>()?;
            let row = json!({
                "levi_factors": levi.components,
                "chi_levi": restricted,
                "n": a.n,
                "dim": JsonInt(levi.invariant_dimension(&chis, a.n)?),
            });
            emit(out, &row)?;
        }
    }
    Ok(0)
}

fn cmd_verify(
    space: &Space,
    s: usize,
    n_max: u32,
    jobs: usize,
    path: Option<&PathBuf>,
    use_cache: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let fv = flag_variety(space)?;
    let report = with_cache(&fv, use_cache, || verify::verify(&fv, s, n_max, jobs, verify::tuple_cap()))?;
    let text = report.to_json()?;
    match path {
        Some(p) => std::fs::write(p, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    let bad = report.violations();
    eprintln!(
        "{}: {} tuples, {} violations",
        fv.group_type(),
        report.tuples.len(),
        bad
    );
    Ok(if bad == 0 { 0 } else { 1 })
}

fn cmd_fulton(r: usize, n_max: u32, sweep: Option<u32>, parts: &[String], out: &mut dyn Write) -> Result<i32> {
    let reports = match sweep {
        Some(k) => {
            if !parts.is_empty() {
                return Err(Error::Invalid("--sweep takes no partitions".into()));
            }
            fulton_sweep(r, k, n_max)?
        }
        None => {
            if parts.len() != 3 {
                return Err(Error::Invalid("expected three partitions λ μ ν".into()));
            }
            let p = parts.iter().map(|s| Partition::parse(s)).collect::<Result<Vec<_>>>()?;
            vec![fulton_check(&p[0], &p[1], &p[2], r, n_max)?]
        }
    };
    let mut bad = 0;
    for rep in &reports {
        bad += rep.violations.len();
        emit(out, rep)?;
    }
    Ok(if bad == 0 { 0 } else { 1 })
}

fn cmd_examples(out: &mut dyn Write) -> Result<i32> {
    let rows = verify::reference_examples()?;
    let mut failed = 0;
    for r in &rows {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        if !r.pass {
            failed += 1;
        }
        writeln!(out, "{tag}  {}: expected {}, got {}", r.name, r.expected, r.actual)?;
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_roots(group: &str, out: &mut dyn Write) -> Result<i32> {
    let rs = RootSystem::from_type(crate::root_system::GroupType::parse(group)?)?;
    let row = json!({
        "group": rs.label(),
        "cartan": rs.cartan(),
        "positive_roots": rs.positive_roots(),
        "rho": weight_json(rs.rho()),
        "weyl_order": crate::weyl::WeylGroup::new(&rs)?.order(),
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&row)?)?;
    Ok(0)
}

/// Runs a parsed command; the return value is the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Wp { space } => cmd_wp(space, out),
        Command::Product {
            space,
            deformed,
            json,
            strict,
            partition,
            words,
        } => {
            let labels = match (strict, partition) {
                (true, _) => Labels::Strict,
                (_, true) => Labels::Partitions,
                _ => Labels::Words,
            };
            cmd_product(space, *deformed, *json, labels, words, out)
        }
        Command::Invariants(a) => cmd_invariants(a, out),
        Command::Verify {
            space,
            s,
            n_max,
            jobs,
            out: path,
            no_cache,
        } => cmd_verify(space, *s, *n_max, *jobs, path.as_ref(), !no_cache, out),
        Command::Fulton {
            r,
            n_max,
            sweep,
            partitions,
        } => cmd_fulton(*r, *n_max, *sweep, partitions, out),
        Command::Examples => cmd_examples(out),
        Command::Roots { group } => cmd_roots(group, out),
    }
}

/// Parses the process arguments and runs; errors go to stderr with exit code 2.
pub fn main_exit_code() -> i32 {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            2
        }
    }
}
