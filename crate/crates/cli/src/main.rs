//! `difsets`: enumerate, check and inspect difference sets in catalog groups.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use difsets_core::automorphism::automorphism_group;
use difsets_core::catalog::{catalog_entry, CatalogId, Numbering};
use difsets_core::enumerate::{
    brute_force_difference_sets, Enumeration, Enumerator, SearchOptions,
};
use difsets_core::group::{normal_subgroups, refinement_chain};
use difsets_core::params::possible_sizes;
use difsets_core::results::{read_results, results_path, write_results, ResultsFile};
use difsets_core::Error;

#[derive(Parser)]
#[command(
    name = "difsets",
    version,
    about = "Difference sets in small finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GroupArgs {
    /// Group order.
    #[arg(long)]
    order: usize,
    /// Catalog id within the order.
    #[arg(long)]
    id: usize,
}

impl GroupArgs {
    fn cid(&self) -> CatalogId {
        CatalogId::new(self.order, self.id)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate difference sets up to equivalence.
    Enumerate {
        #[command(flatten)]
        group: GroupArgs,
        /// Directory to write the results file into.
        #[arg(long, env = "DIFSETS_RESULTS_DIR")]
        out: Option<PathBuf>,
        /// Skip the Bruck-Ryser-Chowla filter on sizes.
        #[arg(long)]
        no_brc: bool,
        /// Lift to all subsets at the last level, not just those containing the identity.
        #[arg(long)]
        no_identity_opt: bool,
        /// Worker threads (defaults to all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Exhaustive subset search, for cross-checking small groups.
    Oracle {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Parse a results file and re-check every set.
    Verify { file: PathBuf },
    /// Admissible parameter triples for a group order.
    Sizes {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        no_brc: bool,
    },
    /// Order, normal subgroups, automorphism count and refinement chain.
    Info {
        #[command(flatten)]
        group: GroupArgs,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Verification { .. } | Error::Checksum { .. } | Error::Version { .. } => 1,
        Error::Capacity { .. } | Error::SizeLimit { .. } | Error::Interrupted => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("difsets: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(command: Command) -> difsets_core::Result<()> {
    match command {
        Command::Enumerate {
            group,
            out,
            no_brc,
            no_identity_opt,
            jobs,
        } => {
            let options = SearchOptions {
                use_brc: !no_brc,
                identity_opt: !no_identity_opt,
                ..SearchOptions::default()
            };
            let enumeration = match jobs {
                Some(0) => return Err(Error::InvalidArgument("--jobs must be at least 1".into())),
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?
                    .install(|| enumerate(group.cid(), options))?,
                None => enumerate(group.cid(), options)?,
            };
            let rf = ResultsFile::new(group.cid(), &enumeration);
            print!("{}", rf.to_text());
            if let Some(dir) = out {
                let path = results_path(&dir, group.cid());
                write_results(&path, &rf)?;
                eprintln!("wrote {}", path.display());
            }
        }
        Command::Oracle { group } => {
            let g = catalog_entry(group.cid())?.group;
            let rf = ResultsFile {
                group: group.cid(),
                blocks: brute_force_difference_sets(&g)?,
            };
            print!("{}", rf.to_text());
        }
        Command::Verify { file } => {
            let rf = read_results(&file)?;
            println!("ok: group {} with {} sets", rf.group, rf.set_count());
        }
        Command::Sizes { order, no_brc } => {
            for p in possible_sizes(order, !no_brc) {
                println!("{p}");
            }
        }
        Command::Info { group } => {
            let entry = catalog_entry(group.cid())?;
            let g = &entry.group;
            let chain = refinement_chain(g)
                .orders()
                .iter()
                .map(|o| o.to_string())
                .collect::<Vec<_>>()
                .join(" > ");
            let numbering = match entry.numbering {
                Numbering::Standard => "standard",
                Numbering::Local => "local",
            };
            println!("group {} {}", entry.id.order, entry.id.id);
            println!("name {}", entry.name);
            println!("numbering {numbering}");
            println!("order {}", g.order());
            println!("abelian {}", g.is_abelian());
            println!("normal subgroups {}", normal_subgroups(g).len());
            println!("automorphisms {}", automorphism_group(g)?.size());
            println!("chain {chain}");
        }
    }
    Ok(())
}

fn enumerate(cid: CatalogId, options: SearchOptions) -> difsets_core::Result<Enumeration> {
    let g = catalog_entry(cid)?.group;
    Enumerator::new(&g, options)?.run()
}
