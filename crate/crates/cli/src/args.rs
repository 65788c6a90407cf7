use clap::{Args, Parser, Subcommand, ValueEnum};

use brunnian_core::presentations::DEFAULT_COSET_CAP;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(name = "brunnian", version, about = "Brunnian braids: coset enumeration, kernel bases and membership tests")]
pub struct Cli {
    /// Print a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the acceptance suite, or the selected groups of it.
    Verify {
        #[arg(long, value_enum)]
        only: Vec<Group>,
        /// Seed for the randomized identity checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Order of a presented group (and its element-order profile when finite).
    Order(GroupArgs),
    /// Number of elements of each order.
    Profile(GroupArgs),
    /// Size of the normal closure of some elements.
    Closure {
        #[command(flatten)]
        group: GroupArgs,
        /// Normal generator, in the word syntax; repeat for more.
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
    },
    /// Brunnian verdict with the strand-removal images as evidence.
    Brunnian {
        /// disk:N, rp2:3 or rp2:2
        group: String,
        /// Word, or @FILE to read it from a file.
        word: String,
    },
    /// Free bases: the Brun3 basis on the projective plane, or kernel truncations.
    Basis {
        #[command(subcommand)]
        which: BasisKind,
    },
    /// Bounded generator lists.
    Enumerate {
        #[command(subcommand)]
        which: EnumerateKind,
    },
    /// James-Hopf operation H_{k,n} of a Brunnian braid on k strands.
    Hopf {
        /// Strand count k of the input braid.
        #[arg(long)]
        strands: usize,
        /// Target strand count n.
        #[arg(long)]
        n: usize,
        /// Order of the factors in the product.
        #[arg(long, default_value = "colex")]
        order: String,
        /// Braid as a σ-word (s1 s2^-1 ...) or an A-word (A[1,3] ...), or @FILE.
        word: String,
    },
    /// Canonical form of a word: Garside form on the disk, semidirect form for rp2:3.
    NormalForm {
        /// disk:N or rp2:3
        group: String,
        /// Word, or @FILE to read it from a file.
        word: String,
    },
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Catalog key such as P2_RP2 or Bn_RP2(3), or a presentation file.
    pub presentation: String,
    /// Strand count for a parametric catalog family (Artin_Bn 3 = Artin_Bn(3)).
    pub n: Option<usize>,
    /// Maximum number of cosets.
    #[arg(long, env = "BRUNNIAN_COSET_CAP", default_value_t = DEFAULT_COSET_CAP)]
    pub cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum BasisKind {
    /// The nine-word free basis of Brun3 of the projective plane.
    Rp2Brun3,
    /// Truncated basis of the intersection of projection kernels.
    Kernel {
        /// Generators, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "x1,x2")]
        alphabet: Vec<String>,
        /// Number of kernels to intersect, taking T_i = S \ {x_i}.
        #[arg(long)]
        k: usize,
        /// Length bound on the y-words.
        #[arg(long)]
        ybound: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum EnumerateKind {
    /// Generators of the symmetric commutator subgroup on the disk.
    BrunnianDisk {
        #[arg(long)]
        n: usize,
        /// Length bound on the pure conjugators.
        #[arg(long, default_value_t = 0)]
        conj: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Group {
    Orders,
    Abelian,
    BrunnianRp2,
    P3,
    Disk,
    Identities,
    Hopf,
    Kernel,
    Brun2,
    Sphere,
}
