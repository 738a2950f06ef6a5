//! Command-line front end: closed-form counts, drawing synthesis, reference
//! tables, oracle-backed verification, and crossing penalty pricing.
//!
//! Exit codes: 0 on success, 1 when verification fails or a file cannot be
//! written, 2 on usage errors (including domain errors from flag values).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sas_layout::export::{self, RenderOptions};
use sas_layout::facet;
use sas_layout::model::{make_spec, Coupling, Drawing, LayoutError, Style, VertexId};
use sas_layout::stats;
use sas_layout::surface;
use sas_layout::verify;

#[derive(Parser)]
#[command(
    name = "sas-layout",
    version,
    about = "Layout synthesis and exact crossing verification for switch-and-select photonic meshes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form crossing and overpass counts as JSON.
    Count {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Synthesize a drawing, write it as JSON, and optionally render an SVG.
    Layout {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Output path for the drawing document.
        #[arg(long)]
        out: PathBuf,
        /// Also render the drawing to this SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Which drawing to synthesize.
        #[arg(long, value_enum, default_value_t = Variant::Wop)]
        variant: Variant,
    },
    /// Print a quantitative comparison table as markdown.
    Table {
        /// 1 for surface coupling, 2 for facet coupling.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Check every closed form against the exact geometric oracle.
    Verify {
        /// Largest switch count in the sweep.
        #[arg(long, default_value_t = 12)]
        max_m: u32,
        /// Largest selector count in the sweep.
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        /// Also brute-force the convex-position minima for n up to 4.
        #[arg(long)]
        exhaustive_convex: bool,
    },
    /// Price a path's crossings in dB.
    Penalty {
        /// Crossings along the path.
        #[arg(long)]
        crossings: u64,
        /// Insertion loss per crossing, in dB (nonnegative).
        #[arg(long, allow_negative_numbers = true)]
        il_db: f64,
        /// Crosstalk leakage per crossing, in dB (nonpositive).
        #[arg(long, allow_negative_numbers = true)]
        xt_db: f64,
        /// Sum crosstalk in power rather than amplitude.
        #[arg(long)]
        incoherent: bool,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// Where light enters and leaves the chip.
    #[arg(long, value_enum)]
    mode: Mode,
    /// Switch implementation style.
    #[arg(long, value_enum)]
    style: StyleArg,
    /// Switch count.
    #[arg(short)]
    m: u32,
    /// Selector count.
    #[arg(short)]
    n: u32,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Surface,
    Facet,
}

impl Mode {
    fn coupling(self) -> Coupling {
        match self {
            Mode::Surface => Coupling::Surface,
            Mode::Facet => Coupling::Facet,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Mode::Surface => "surface",
            Mode::Facet => "facet",
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum StyleArg {
    Le,
    Bt,
}

impl StyleArg {
    fn style(self) -> Style {
        match self {
            StyleArg::Le => Style::LumpedElement,
            StyleArg::Bt => Style::BinaryTree,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Variant {
    /// Unoptimized drawing: two port columns (surface) or clustered ports
    /// (facet).
    Basic,
    /// Crossing-minimizing planar drawing (surface only).
    Zarankiewicz,
    /// Largest crossing-free spanning subgraph.
    Subgraph,
    /// Crossing-free hybrid drawing with waveguide overpasses.
    Wop,
    /// Lumped-element hybrid routed through boundary chord stubs
    /// (surface only).
    ChordStubWop,
    /// Ports interleaved along two boundary axes (facet only).
    Axes,
    /// Ports interleaved around the boundary (facet only).
    Interleaved,
    /// Ports clustered by party around the boundary (facet only).
    Clustered,
    /// 4 x 4 clustered drawing with detour reroutes (facet only).
    ReroutedClustered,
    /// 4 x 4 interleaved drawing with detour reroutes (facet only).
    ReroutedInterleaved,
}

impl Variant {
    fn name(self) -> &'static str {
        match self {
            Variant::Basic => "basic",
            Variant::Zarankiewicz => "zarankiewicz",
            Variant::Subgraph => "subgraph",
            Variant::Wop => "wop",
            Variant::ChordStubWop => "chord-stub-wop",
            Variant::Axes => "axes",
            Variant::Interleaved => "interleaved",
            Variant::Clustered => "clustered",
            Variant::ReroutedClustered => "rerouted-clustered",
            Variant::ReroutedInterleaved => "rerouted-interleaved",
        }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<LayoutError> for Failure {
    fn from(e: LayoutError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Count { instance } => {
            let InstanceArgs { mode, style, m, n } = instance;
            make_spec(m, n, mode.coupling(), style.style())?;
            let json = match mode {
                Mode::Surface => serde_json::to_string_pretty(&surface::surface_formulas(m, n)),
                Mode::Facet => serde_json::to_string_pretty(&facet::facet_formulas(m, n)),
            }
            .expect("formula sets serialize");
            println!("{json}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Layout { instance, out, svg, variant } => {
            let InstanceArgs { mode, style, m, n } = instance;
            make_spec(m, n, mode.coupling(), style.style())?;
            let drawing = build_variant(mode, style.style(), variant, m, n)?;
            fs::write(&out, export::export_drawing_json(&drawing))?;
            eprintln!("wrote {}", out.display());
            if let Some(svg_path) = svg {
                fs::write(&svg_path, export::render_svg(&drawing, &RenderOptions::default())?)?;
                eprintln!("wrote {}", svg_path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { which } => {
            let tables = verify::reproduce_tables();
            let rows = match which {
                1 => tables.surface,
                _ => tables.facet,
            };
            print!("{}", export::comparison_table_markdown(&rows));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_m, max_n, exhaustive_convex } => {
            let reports = verify::verify_sweep(max_m, max_n)
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            let failures: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
            let whitelisted = reports
                .iter()
                .flat_map(|r| &r.discrepancies)
                .filter(|d| d.whitelisted)
                .count();
            let mut convex = Vec::new();
            let mut convex_pass = true;
            if exhaustive_convex {
                for n in 2..=4u32 {
                    let search = verify::exhaustive_convex_search(n)
                        .map_err(|e| Failure::Runtime(e.to_string()))?;
                    let expected = facet::eta_facet_interleaved(n, n)
                        .map_err(|e| Failure::Runtime(e.to_string()))?;
                    let alternating: Vec<VertexId> = (1..=n as i32)
                        .flat_map(|i| [VertexId::m(i), VertexId::n(i)])
                        .collect();
                    let alternating_optimal = search
                        .optimal_orders
                        .contains(&verify::canonical_order(&alternating));
                    let ok = search.min_crossings == expected && alternating_optimal;
                    convex_pass &= ok;
                    convex.push(serde_json::json!({
                        "n": n,
                        "min_crossings": search.min_crossings,
                        "expected": expected,
                        "optimal_order_count": search.optimal_orders.len(),
                        "alternating_optimal": alternating_optimal,
                        "pass": ok,
                    }));
                }
            }
            let pass = failures.is_empty() && convex_pass;
            let summary = serde_json::json!({
                "max_m": max_m,
                "max_n": max_n,
                "instances": reports.len(),
                "whitelisted_discrepancies": whitelisted,
                "failures": failures,
                "convex_search": exhaustive_convex.then_some(convex),
                "pass": pass,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&summary).expect("summary serializes")
            );
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Penalty { crossings, il_db, xt_db, incoherent } => {
            let p = if incoherent {
                stats::path_penalty_incoherent(crossings, il_db, xt_db)
            } else {
                stats::path_penalty(crossings, il_db, xt_db)
            }?;
            let label = if incoherent { "incoherent" } else { "coherent" };
            println!(
                "IL: {:.2} dB, worst-case {label} XT: {:.2} dB",
                p.total_il_db, p.worst_case_coherent_xt_db
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build_variant(
    mode: Mode,
    style: Style,
    variant: Variant,
    m: u32,
    n: u32,
) -> Result<Drawing, Failure> {
    let drawing = match (mode, variant) {
        (Mode::Surface, Variant::Basic) => surface::build_basic_surface_drawing(m, n)?,
        (Mode::Surface, Variant::Zarankiewicz) => surface::build_zarankiewicz_drawing(m, n)?,
        (Mode::Surface, Variant::Subgraph) => surface::build_spanning_max_planar_subgraph(m, n)?,
        (Mode::Surface, Variant::Wop) => match style {
            Style::LumpedElement => surface::place_wop_le_surface(m, n)?,
            Style::BinaryTree => surface::place_wop_bt_surface(m, n)?,
        },
        (Mode::Surface, Variant::ChordStubWop) => {
            if style == Style::BinaryTree {
                return Err(Failure::Usage(
                    "variant chord-stub-wop exists only for --style le".into(),
                ));
            }
            surface::place_wop_le_surface_chord_stubs(m, n)?
        }
        (Mode::Facet, Variant::Basic) | (Mode::Facet, Variant::Clustered) => {
            facet::build_clustered_facet_drawing(m, n)?
        }
        (Mode::Facet, Variant::Axes) => facet::build_facet_axes_drawing(m, n)?,
        (Mode::Facet, Variant::Interleaved) => facet::build_interleaved_facet_drawing_mn(m, n)?,
        (Mode::Facet, Variant::Subgraph) => facet::build_facet_spanning_planar_subgraph(m, n)?,
        (Mode::Facet, Variant::Wop) => match style {
            Style::LumpedElement => facet::place_wop_le_facet(m, n)?,
            Style::BinaryTree => facet::place_wop_bt_facet(m, n)?,
        },
        (Mode::Facet, Variant::ReroutedClustered) => {
            fixed_4x4(m, n, facet::clustered_rerouted_4x4)?
        }
        (Mode::Facet, Variant::ReroutedInterleaved) => {
            fixed_4x4(m, n, facet::interleaved_rerouted_4x4)?
        }
        (mode, variant) => {
            return Err(Failure::Usage(format!(
                "variant {} is not defined for --mode {}",
                variant.name(),
                mode.name()
            )));
        }
    };
    Ok(drawing)
}

fn fixed_4x4(
    m: u32,
    n: u32,
    build: fn() -> Result<Drawing, LayoutError>,
) -> Result<Drawing, Failure> {
    if (m, n) != (4, 4) {
        return Err(Failure::Usage(format!(
            "rerouted demonstrations are fixed at 4 x 4, got {m} x {n}"
        )));
    }
    Ok(build()?)
}
