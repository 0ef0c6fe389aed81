//! Figure data: the dimensionless curves behind the range, SNR, and
//! sensitivity plots, one CSV table per curve.
//!
//! Every axis is a ratio (`Omega^2 / (gamma_x gamma_y)`, `sqrt(N_in) *
//! sensitivity`, SNR per photon), so the absolute rate scales cancel and the
//! curves are generated from a normalized parameter set.

use gyro_core::*;

use crate::csvout::Table;

/// Identifiers of the reproducible figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig2,
    Fig3a,
    Fig3b,
    Fig3c,
    Fig4a,
    Fig4b,
    Fig4c,
}

impl FigureId {
    pub const ALL: [FigureId; 7] = [
        FigureId::Fig2,
        FigureId::Fig3a,
        FigureId::Fig3b,
        FigureId::Fig3c,
        FigureId::Fig4a,
        FigureId::Fig4b,
        FigureId::Fig4c,
    ];

    pub fn parse(name: &str) -> Option<FigureId> {
        match name {
            "fig2" => Some(FigureId::Fig2),
            "fig3a" => Some(FigureId::Fig3a),
            "fig3b" => Some(FigureId::Fig3b),
            "fig3c" => Some(FigureId::Fig3c),
            "fig4a" => Some(FigureId::Fig4a),
            "fig4b" => Some(FigureId::Fig4b),
            "fig4c" => Some(FigureId::Fig4c),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FigureId::Fig2 => "fig2",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
            FigureId::Fig3c => "fig3c",
            FigureId::Fig4a => "fig4a",
            FigureId::Fig4b => "fig4b",
            FigureId::Fig4c => "fig4c",
        }
    }
}

/// One named curve ready to be written as a CSV file.
#[derive(Debug, Clone)]
pub struct Curve {
    pub file_name: String,
    pub table: Table,
}

/// Curve-generation knobs. The cooperativity sets are not pinned by any
/// closed form; the defaults sit around the impedance-matching value 1
/// (and around 0.25 for the squeeze sweep of the SNR), and every curve is
/// labeled with its cooperativity.
#[derive(Debug, Clone)]
pub struct FigureOptions {
    pub co_list: Vec<f64>,
    pub co_list_snr_vs_r: Vec<f64>,
    pub r_experimental: f64,
    pub grid_points: usize,
}

impl Default for FigureOptions {
    fn default() -> Self {
        FigureOptions {
            co_list: vec![0.75, 1.0, 1.25],
            co_list_snr_vs_r: vec![0.25, 0.5, 1.0],
            r_experimental: 1.73,
            grid_points: 201,
        }
    }
}

fn normalized_config() -> ValidatedConfig<f64> {
    validate(GyroParams::default_normalized(), InputField::Vacuum).unwrap()
}

fn grid(start: f64, stop: f64, points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| start + (stop - start) * i as f64 / (points - 1) as f64)
        .collect()
}

fn base_table(header: &[&str], figure: FigureId, co: f64, input_label: &str) -> Table {
    let mut t = Table::new(header);
    t.meta("generator", format!("gyro {}", env!("CARGO_PKG_VERSION")));
    t.meta("figure", figure.name());
    t.meta("co", co);
    t.meta("input", input_label);
    t.meta("units", "omega_sq in gamma_x*gamma_y; sensitivity as sqrt(N_in)*delta_omega_sq");
    t
}

/// Build all curves for one figure.
pub fn figure_curves(figure: FigureId, options: &FigureOptions) -> Vec<Curve> {
    let cfg = normalized_config();
    let gp = cfg.params().gamma_prod();
    let points = options.grid_points;
    let r_exp = options.r_experimental;
    let mut curves = Vec::new();

    match figure {
        FigureId::Fig2 => {
            // readable-range upper bound against the squeeze parameter;
            // the vacuum curve is constant and kept as a separate file
            for &co in &options.co_list {
                let rs = grid(0.0, r_exp, points);
                let mut squeezed = base_table(&["r", "omega_sq_ub"], figure, co, "squeezed");
                let mut vacuum = base_table(&["r", "omega_sq_ub"], figure, co, "vacuum");
                let vacuum_bound = omega_range(co, &InputField::Vacuum).unwrap();
                for &r in &rs {
                    let bound = omega_range(co, &InputField::SqueezedVacuum { r }).unwrap();
                    squeezed.push_row(vec![r, bound]);
                    vacuum.push_row(vec![r, vacuum_bound]);
                }
                curves.push(Curve {
                    file_name: format!("fig2_squeezed_co{co}.csv"),
                    table: squeezed,
                });
                curves.push(Curve {
                    file_name: format!("fig2_vacuum_co{co}.csv"),
                    table: vacuum,
                });
            }
        }
        FigureId::Fig3a | FigureId::Fig3b => {
            // SNR per photon against the squared angular velocity, swept
            // exactly up to the range bound where the SNR crosses 1
            let (input_label, input_of): (_, Box<dyn Fn() -> InputField<f64>>) =
                if figure == FigureId::Fig3a {
                    ("vacuum", Box::new(|| InputField::Vacuum))
                } else {
                    (
                        "squeezed r=1.73",
                        Box::new(move || InputField::SqueezedVacuum { r: r_exp }),
                    )
                };
            for &co in &options.co_list {
                let input = input_of();
                let bound = omega_range(co, &input).unwrap();
                let mut t = base_table(&["omega_rot_sq", "snr_per_photon"], figure, co, input_label);
                for &osq in &grid(0.0, bound, points) {
                    let snr = snr_per_photon_resonance(
                        &cfg,
                        co,
                        AngularVelocity::from_squared(osq * gp).unwrap(),
                        &input,
                    );
                    t.push_row(vec![osq, snr]);
                }
                curves.push(Curve {
                    file_name: format!("{}_co{co}.csv", figure.name()),
                    table: t,
                });
            }
        }
        FigureId::Fig3c => {
            // SNR per photon against the squeeze parameter at Omega^2 = gamma_x gamma_y
            let osq = AngularVelocity::from_squared(gp).unwrap();
            for &co in &options.co_list_snr_vs_r {
                let mut t = base_table(&["r", "snr_per_photon"], figure, co, "squeezed");
                for &r in &grid(0.0, r_exp, points) {
                    let snr =
                        snr_per_photon_resonance(&cfg, co, osq, &InputField::SqueezedVacuum { r });
                    t.push_row(vec![r, snr]);
                }
                curves.push(Curve {
                    file_name: format!("fig3c_co{co}.csv"),
                    table: t,
                });
            }
        }
        FigureId::Fig4a => {
            // resonance sensitivity against the squared angular velocity up
            // to the respective range bounds
            for &co in &options.co_list {
                for (label, input) in [
                    ("vacuum", InputField::Vacuum),
                    ("squeezed r=1.73", InputField::SqueezedVacuum { r: r_exp }),
                ] {
                    let bound = omega_range(co, &input).unwrap();
                    let mut t =
                        base_table(&["omega_rot_sq", "sensitivity"], figure, co, label);
                    for &osq in &grid(0.0, bound, points) {
                        let s = sensitivity_resonance(
                            &cfg,
                            co,
                            AngularVelocity::from_squared(osq * gp).unwrap(),
                            &input,
                        );
                        t.push_row(vec![osq, s]);
                    }
                    let tag = if input == InputField::Vacuum {
                        "vacuum"
                    } else {
                        "squeezed"
                    };
                    curves.push(Curve {
                        file_name: format!("fig4a_{tag}_co{co}.csv"),
                        table: t,
                    });
                }
            }
        }
        FigureId::Fig4b => {
            // sensitivity against the squeeze parameter at zero rotation,
            // with the vacuum quantum-limit floor as a reference column
            let osq = AngularVelocity::zero();
            let sql = sensitivity_limit(&cfg, osq, &InputField::Vacuum).limit;
            for &co in &options.co_list {
                let mut t =
                    base_table(&["r", "sensitivity", "sql_limit"], figure, co, "squeezed");
                for &r in &grid(0.0, 3.0, points) {
                    let s =
                        sensitivity_resonance(&cfg, co, osq, &InputField::SqueezedVacuum { r });
                    t.push_row(vec![r, s, sql]);
                }
                curves.push(Curve {
                    file_name: format!("fig4b_co{co}.csv"),
                    table: t,
                });
            }
        }
        FigureId::Fig4c => {
            // squeezed-over-vacuum sensitivity ratio at zero rotation with
            // its cap sqrt((1 + exp(-2r))/2)
            let osq = AngularVelocity::zero();
            for &co in &options.co_list {
                let mut t = base_table(&["r", "ratio", "bound"], figure, co, "squeezed/vacuum");
                for &r in &grid(0.0, 3.0, points) {
                    let sr = sensitivity_ratio(&cfg, co, osq, r);
                    t.push_row(vec![r, sr.ratio, sr.bound]);
                }
                curves.push(Curve {
                    file_name: format!("fig4c_co{co}.csv"),
                    table: t,
                });
            }
        }
    }
    curves
}
