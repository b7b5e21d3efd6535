use std::path::Path;

use anyhow::{bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use springer_levels::field::PrimeField;
use springer_levels::orbits::{
    classify_type, flag_dims, semi_standard_element, EnhancedPoint, PointJson, SemiStandardCoeffs,
    TypeTrace,
};
use springer_levels::partitions::{Case, LevelComposition, MultiPartition, Partition};
use springer_levels::pointcount::count_records;
use springer_levels::reflection::{springer_table, springer_tables, SpringerRow};

use crate::{Cli, Format};

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_text<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn json_only(cli: &Cli, command: &str) -> Result<()> {
    if cli.format == Some(Format::Csv) {
        bail!("{command} only writes JSON");
    }
    Ok(())
}

#[derive(Serialize)]
struct TableCsvRow {
    m: String,
    label: String,
    case: Case,
    #[serde(rename = "dim_irrep_Wnat")]
    dim_irrep_wnat: String,
    #[serde(rename = "dim_irrep_Wnr")]
    dim_irrep_wnr: String,
    #[serde(rename = "dim_X")]
    dim_x: i64,
    d_lambda: i64,
    ambient_dim: i64,
}

impl From<&SpringerRow> for TableCsvRow {
    fn from(row: &SpringerRow) -> Self {
        TableCsvRow {
            m: row.m.to_string(),
            label: row.stratum.label.to_string(),
            case: row.stratum.case,
            dim_irrep_wnat: row.wnat.dim.to_string(),
            dim_irrep_wnr: row.wnr.as_ref().map(|w| w.dim.to_string()).unwrap_or_default(),
            dim_x: row.stratum.dim_x,
            d_lambda: row.stratum.d_lambda,
            ambient_dim: row.stratum.ambient_dim,
        }
    }
}

pub fn table(
    cli: &Cli,
    n: usize,
    r: usize,
    case: Case,
    m: Option<&LevelComposition>,
    out_dir: Option<&Path>,
) -> Result<String> {
    if r == 0 {
        bail!("r must be at least 1");
    }
    let rows = match m {
        Some(m) => {
            if m.size() != n || m.level() != r {
                bail!("m = {m} is not a level-{r} composition of {n}");
            }
            springer_table(m, case)?
        }
        None => springer_tables(n, r, case)?,
    };
    let as_csv = || csv_text(rows.iter().map(TableCsvRow::from));
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        std::fs::write(dir.join("table.csv"), as_csv()?)?;
        std::fs::write(dir.join("table.json"), json(&rows)?)?;
        return Ok(format!("wrote {} rows to {}\n", rows.len(), dir.display()));
    }
    match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => as_csv(),
        Format::Json => json(&rows),
    }
}

#[derive(Serialize)]
struct Classification {
    label: String,
    #[serde(rename = "type")]
    ty: MultiPartition,
    flag_dims: Vec<usize>,
    trace: TypeTrace,
}

/// A bare point, or the object written by `standard-element`.
#[derive(Deserialize)]
#[serde(untagged)]
enum PointInput {
    Bare(PointJson),
    Wrapped { point: PointJson },
}

pub fn classify(cli: &Cli, input: &Path) -> Result<String> {
    json_only(cli, "classify")?;
    let text = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let raw: PointInput = serde_json::from_str(&text)
        .with_context(|| format!("{} is not a point (fields q, n, r, x, vs)", input.display()))?;
    let raw = match raw {
        PointInput::Bare(p) | PointInput::Wrapped { point: p } => p,
    };
    let point = EnhancedPoint::try_from(raw)?;
    let (ty, trace) = classify_type(&point)?;
    json(&Classification { label: ty.to_string(), flag_dims: flag_dims(&point)?, ty, trace })
}

#[derive(Serialize)]
struct CountCsvRow {
    nu: String,
    lambda: String,
    q: u64,
    count_v: u64,
    orbit_size: String,
    stratum_count: String,
}

pub fn count(cli: &Cli, n: Option<usize>, r: usize, nus: &[Partition], qs: &[u64]) -> Result<String> {
    let nus = match (n, nus.is_empty()) {
        (Some(n), true) => Partition::all(n),
        (None, true) => bail!("give --n or at least one --nu"),
        (n, false) => {
            if let Some(bad) = nus.iter().find(|nu| n.is_some_and(|n| nu.size() != n)) {
                bail!("ν = {bad} is not a partition of {}", n.unwrap_or_default());
            }
            nus.to_vec()
        }
    };
    let mut records = Vec::new();
    for nu in &nus {
        for &q in qs {
            records.extend(count_records(nu, q, r, cli.budget)?);
        }
    }
    match cli.format.unwrap_or(Format::Csv) {
        Format::Json => json(&records),
        Format::Csv => csv_text(records.iter().map(|rec| CountCsvRow {
            nu: rec.nu.to_string(),
            lambda: rec.label.to_string(),
            q: rec.q,
            count_v: rec.count_v,
            orbit_size: rec.orbit_size.to_string(),
            stratum_count: rec.stratum_count.to_string(),
        })),
    }
}

#[derive(Serialize)]
struct Witness {
    label: String,
    coefficients: SemiStandardCoeffs,
    point: EnhancedPoint,
}

pub fn standard(cli: &Cli, label: &MultiPartition, q: u64, semi: bool) -> Result<String> {
    json_only(cli, "standard-element")?;
    let field = PrimeField::new(q)?;
    let coefficients = if semi {
        SemiStandardCoeffs::sample(label, field, &mut ChaCha8Rng::seed_from_u64(cli.seed))
    } else {
        SemiStandardCoeffs::standard(label)
    };
    let point = semi_standard_element(label, field, &coefficients)?;
    json(&Witness { label: label.to_string(), coefficients, point })
}
