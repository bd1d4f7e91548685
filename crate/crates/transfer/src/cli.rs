//! Command-line interface: thin wrappers over the library with deterministic
//! text output. Exit codes: 0 success, 1 failed verification, 2 usage or
//! parse errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use itertools::Itertools;

use crate::algebra::parse_element;
use crate::coset::{CosetSystem, Side};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientGroup, SubgroupRef};
use crate::ring::Ring;
use crate::spec_file::parse_group_file;
use crate::transfer::{det_transfer, left_transfer, right_transfer, sign_of, verify_properties};

#[derive(Parser)]
#[command(name = "transfer", about = "Group transfers and noncommutative determinants over group algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// Path to a group definition file (JSON)
    #[arg(long)]
    group: PathBuf,
}

#[derive(Args)]
struct CosetArgs {
    /// Coset side
    #[arg(long, default_value = "left")]
    side: SideArg,
    /// Comma-separated representative labels, one per coset
    #[arg(long)]
    reps: Option<String>,
    /// Draw random representatives with this seed
    #[arg(long)]
    resample_seed: Option<u64>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the group's order, identity, elements, and named subgroups
    Show {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Print the coset decomposition of a subgroup
    Cosets {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        subgroup: String,
        #[command(flatten)]
        cosets: CosetArgs,
    },
    /// Compute the transfer of one element into H/K
    Transfer {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        kernel: String,
        /// Element label
        #[arg(long)]
        element: String,
        #[command(flatten)]
        cosets: CosetArgs,
    },
    /// Compute the determinant-based transfer of an algebra element
    Det {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        kernel: String,
        /// Algebra element, e.g. "2*a + 3*b - 1/2*e"
        #[arg(long)]
        alpha: String,
        /// Coefficient ring: int, rat, or mod:<n>
        #[arg(long, default_value = "rat")]
        ring: String,
        #[command(flatten)]
        cosets: CosetArgs,
    },
    /// Print the sign of the coset permutation induced by an element
    Sign {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        element: String,
        #[command(flatten)]
        cosets: CosetArgs,
    },
    /// Run the property verification suite on (G, H, K)
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        kernel: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn lookup_subgroup(
    subgroups: &BTreeMap<String, SubgroupRef>,
    name: &str,
) -> Result<SubgroupRef> {
    subgroups
        .get(name)
        .cloned()
        .ok_or_else(|| Error::UnknownLabel(name.to_string()))
}

fn build_system(
    group: &Arc<FiniteGroup>,
    subgroup: &SubgroupRef,
    args: &CosetArgs,
) -> Result<CosetSystem> {
    let side: Side = args.side.into();
    let reps: Option<Vec<usize>> = match &args.reps {
        None => None,
        Some(s) => Some(
            s.split(',')
                .map(|l| group.index_of_label(l.trim()))
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    let cs = CosetSystem::decompose(Arc::clone(group), subgroup.clone(), side, reps.as_deref())?;
    Ok(match args.resample_seed {
        Some(seed) => cs.resample(seed),
        None => cs,
    })
}

fn execute(command: Command) -> Result<(i32, String)> {
    let mut out = String::new();
    match command {
        Command::Show { group } => {
            let (g, subs) = parse_group_file(&group.group)?;
            writeln!(out, "order: {}", g.order).unwrap();
            writeln!(out, "identity: {}", g.label(g.identity)).unwrap();
            writeln!(out, "abelian: {}", g.is_abelian()).unwrap();
            writeln!(out, "elements: {}", (0..g.order).map(|i| g.label(i)).join(" ")).unwrap();
            for (name, s) in &subs {
                writeln!(
                    out,
                    "subgroup {name}: order {} {{{}}}",
                    s.order(),
                    s.members.iter().map(|&m| g.label(m)).join(", ")
                )
                .unwrap();
            }
            Ok((0, out))
        }
        Command::Cosets { group, subgroup, cosets } => {
            let (g, subs) = parse_group_file(&group.group)?;
            let h = lookup_subgroup(&subs, &subgroup)?;
            let cs = build_system(&g, &h, &cosets)?;
            writeln!(out, "index: {}", cs.index()).unwrap();
            for (i, &r) in cs.reps.iter().enumerate() {
                let members = (0..g.order).filter(|&x| cs.rep_of[x] == i).map(|x| g.label(x)).join(", ");
                writeln!(out, "coset {i}: rep={} members={{{members}}}", g.label(r)).unwrap();
            }
            Ok((0, out))
        }
        Command::Transfer { group, subgroup, kernel, element, cosets } => {
            let (g, subs) = parse_group_file(&group.group)?;
            let h = lookup_subgroup(&subs, &subgroup)?;
            let k = lookup_subgroup(&subs, &kernel)?;
            let q = QuotientGroup::new(h.clone(), k)?;
            let cs = build_system(&g, &h, &cosets)?;
            let x = g.index_of_label(&element)?;
            let v = match cs.side {
                Side::Left => left_transfer(&q, &cs, x)?,
                Side::Right => right_transfer(&q, &cs, x)?,
            };
            writeln!(out, "coset: {}", q.cosets.label(v.coset)).unwrap();
            writeln!(out, "sign: {:+}", v.sign).unwrap();
            Ok((0, out))
        }
        Command::Det { group, subgroup, kernel, alpha, ring, cosets } => {
            let (g, subs) = parse_group_file(&group.group)?;
            let h = lookup_subgroup(&subs, &subgroup)?;
            let k = lookup_subgroup(&subs, &kernel)?;
            let q = QuotientGroup::new(h.clone(), k)?;
            let ring = Ring::parse_name(&ring)?;
            let cs = build_system(&g, &h, &cosets)?;
            if cs.side != Side::Left {
                return Err(Error::WrongSide { expected: "left" });
            }
            let a = parse_element(ring, &g, &alpha)?;
            let d = det_transfer(&q, &cs, &a)?;
            writeln!(out, "{}", d.render()).unwrap();
            Ok((0, out))
        }
        Command::Sign { group, subgroup, element, cosets } => {
            let (g, subs) = parse_group_file(&group.group)?;
            let h = lookup_subgroup(&subs, &subgroup)?;
            let cs = build_system(&g, &h, &cosets)?;
            let x = g.index_of_label(&element)?;
            writeln!(out, "{:+}", sign_of(&cs, x)).unwrap();
            Ok((0, out))
        }
        Command::Verify { group, subgroup, kernel, seed, samples } => {
            let (g, subs) = parse_group_file(&group.group)?;
            let h = lookup_subgroup(&subs, &subgroup)?;
            let k = lookup_subgroup(&subs, &kernel)?;
            let report = verify_properties(&g, &h, &k, seed, samples)?;
            write!(out, "{report}").unwrap();
            let code = if report.all_passed() { 0 } else { 1 };
            Ok((code, out))
        }
    }
}

/// Parse and run one command line; returns (exit code, text output).
pub fn run_command<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok((code, out)) => (code, out),
        Err(e) => (2, format!("error: {e}\n")),
    }
}
