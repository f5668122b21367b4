//! Coefficient tables for the Motzkin path statistics.

use anyhow::{bail, Result};
use gjcluster::paths::{
    gf_asc_height_restricted, gf_pv_height_restricted, gf_statistic, HeightSet, Statistic,
};

use crate::render::{Block, Report};

pub const MAX_TABLE_ORDER: usize = 20;

pub const TABLE_NAMES: [&str; 7] = [
    "asc",
    "peak",
    "plt1",
    "plt",
    "pv",
    "asc-parity",
    "pv-parity",
];

/// Cells with a known misprint in circulation.
const PEAK_TYPO: (usize, &str) = (4, "corrects the misprint 4+4+t^2");
const PV_TYPO: (usize, &str) = (5, "reads the misprint 2t^2t_2 as 2*t1^2*t2");

pub fn table(name: &str, n: usize) -> Result<Report> {
    if n > MAX_TABLE_ORDER {
        bail!("tables are limited to --n {MAX_TABLE_ORDER}");
    }
    let stat = |title: &str, label: &str, s: Statistic| -> Result<Report> {
        Ok(Report::new(
            title,
            s.arity(),
            vec![Block::new(label, &gf_statistic(s, None, n)?)],
        ))
    };
    Ok(match name {
        "asc" => stat("Motzkin paths by ascents", "asc", Statistic::Ascents)?,
        "peak" => {
            let mut r = stat("Motzkin paths by peaks", "peak", Statistic::Peaks)?;
            r.blocks[0] = r.blocks[0].clone().with_note(PEAK_TYPO.0, PEAK_TYPO.1);
            r
        }
        "plt1" => stat(
            "Motzkin paths by plateaus of length 1",
            "plt1",
            Statistic::Plateaus(1),
        )?,
        "plt" => stat("Motzkin paths by plateaus", "plt", Statistic::AllPlateaus)?,
        "pv" => {
            let mut r = stat(
                "Motzkin paths by peaks (t1) and valleys (t2)",
                "pv",
                Statistic::PeaksValleys,
            )?;
            r.blocks[0] = r.blocks[0].clone().with_note(PV_TYPO.0, PV_TYPO.1);
            r
        }
        "asc-parity" => {
            let blocks = [("E", HeightSet::Even), ("O", HeightSet::Odd)]
                .into_iter()
                .map(|(label, a)| {
                    Ok(Block::new(
                        format!("ascents end in {label}"),
                        &gf_asc_height_restricted(&a, None, n)?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Report::new(
                "Motzkin paths with every ascent ending at a height of given parity",
                0,
                blocks,
            )
        }
        "pv-parity" => {
            use HeightSet::{EvenWithZero as E0, Odd as O};
            let blocks = [(O, E0), (E0, O), (O, O), (E0, E0)]
                .into_iter()
                .map(|(p, v)| {
                    let s = gf_pv_height_restricted(&p, &v, None, n)?;
                    Ok(Block::new(format!("peaks in {p}, valleys in {v}"), &s))
                })
                .collect::<Result<Vec<_>>>()?;
            Report::new(
                "Motzkin paths with peak and valley heights of given parity",
                0,
                blocks,
            )
        }
        other => bail!(
            "unknown table {other:?}; expected one of {}",
            TABLE_NAMES.join(", ")
        ),
    })
}
