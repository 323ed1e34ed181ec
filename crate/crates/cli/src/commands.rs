use ballot_snakes::series::trig;
use ballot_snakes::snake::enumerate_snakes_capped;
use ballot_snakes::{
    phi, psi, psi_trace, triangle as build_triangle, LabeledBallotPath, Snake, TriangleKind,
    TrigName,
};
use clap::ValueEnum;
use serde_json::json;

/// Output formats; each command accepts a subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Egf,
}

const FORMAT_ENV: &str = "SNAKES_FORMAT";

/// The explicit flag if given, else `SNAKES_FORMAT` when the command supports
/// it, else the command's default (the first of `allowed`).
fn pick_format(flag: Option<Format>, allowed: &[Format]) -> Result<Format, String> {
    let names = || {
        allowed
            .iter()
            .filter_map(|f| f.to_possible_value())
            .map(|v| v.get_name().to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    if let Some(format) = flag {
        return if allowed.contains(&format) {
            Ok(format)
        } else {
            Err(format!(
                "unsupported format for this command; expected one of {}",
                names()
            ))
        };
    }
    let from_env = std::env::var(FORMAT_ENV)
        .ok()
        .and_then(|v| Format::from_str(v.trim(), true).ok())
        .filter(|f| allowed.contains(f));
    Ok(from_env.unwrap_or(allowed[0]))
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|line| line + "\n").collect()
}

pub fn snakes(n: usize, format: Option<Format>, cap: usize) -> Result<String, String> {
    let format = pick_format(format, &[Format::Plain, Format::Json, Format::Csv])?;
    let all = enumerate_snakes_capped(n, cap).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Json => {
            let records: Vec<Vec<i32>> = all.map(Vec::from).collect();
            json!(records).to_string() + "\n"
        }
        Format::Csv => {
            let header = (1..=n)
                .map(|i| format!("p{i}"))
                .collect::<Vec<_>>()
                .join(",");
            lines(std::iter::once(header).chain(all.map(|s| s.to_string())))
        }
        _ => lines(all.map(|s| s.to_string())),
    })
}

pub fn map_phi(snake: &str, trace: bool) -> Result<String, String> {
    let snake: Snake = snake.parse().map_err(|e| format!("invalid snake: {e}"))?;
    let image = phi(&snake);
    if !trace {
        return Ok(format!("{image}\n"));
    }
    let stages = psi_trace(&image).map_err(|e| e.to_string())?;
    let record = json!({
        "snake": snake.entries(),
        "inversion_code": snake.inversion_code().values(),
        "alpha": snake.alpha(),
        "steps": image.path().to_string(),
        "labels": image.labels(),
        "stages": stages.to_json(),
    });
    Ok(format!("{record:#}\n"))
}

pub fn map_psi(path: &str, labels: &str, trace: bool) -> Result<String, String> {
    let lpath =
        LabeledBallotPath::parse(path, labels).map_err(|e| format!("invalid labeled path: {e}"))?;
    if !trace {
        let snake = psi(&lpath).map_err(|e| e.to_string())?;
        return Ok(format!("{snake}\n"));
    }
    let stages = psi_trace(&lpath).map_err(|e| e.to_string())?;
    let record = json!({
        "steps": lpath.path().to_string(),
        "labels": lpath.labels(),
        "stages": stages.to_json(),
        "contracted": stages.contracted(),
        "snake": stages.snake.entries(),
    });
    Ok(format!("{record:#}\n"))
}

pub fn triangle(kind: TriangleKind, rows: usize, format: Option<Format>) -> Result<String, String> {
    let format = pick_format(format, &[Format::Csv, Format::Json])?;
    let table = build_triangle(kind, rows).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Json => table.to_json().to_string() + "\n",
        _ => table.to_csv(),
    })
}

pub fn series(name: TrigName, order: usize, format: Option<Format>) -> Result<String, String> {
    const MAX_ORDER: usize = 200;
    if order > MAX_ORDER {
        return Err(format!("order {order} exceeds the limit {MAX_ORDER}"));
    }
    let format = pick_format(format, &[Format::Json, Format::Egf])?;
    let s = trig(name, order);
    Ok(match format {
        Format::Egf => lines((0..=order).map(|n| format!("{n},{}", s.egf_coefficient(n)))),
        _ => s.to_json().to_string() + "\n",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_format_must_be_supported() {
        assert_eq!(
            pick_format(Some(Format::Csv), &[Format::Csv, Format::Json]),
            Ok(Format::Csv)
        );
        assert!(pick_format(Some(Format::Egf), &[Format::Csv, Format::Json]).is_err());
    }

    #[test]
    fn snake_formats() {
        assert_eq!(
            snakes(2, Some(Format::Plain), 10).unwrap(),
            "1,-2\n2,1\n2,-1\n"
        );
        assert_eq!(snakes(1, Some(Format::Json), 10).unwrap(), "[[1]]\n");
        assert_eq!(snakes(1, Some(Format::Csv), 10).unwrap(), "p1\n1\n");
        assert!(snakes(11, Some(Format::Plain), 10).is_err());
    }

    #[test]
    fn egf_lines_are_integers_for_integral_series() {
        let out = series(TrigName::Tan, 5, Some(Format::Egf)).unwrap();
        assert_eq!(out, "0,0\n1,1\n2,0\n3,2\n4,0\n5,16\n");
    }
}
