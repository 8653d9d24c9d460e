use std::io::Write;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};
use veronese_core::polyseries::{characteristic, expand, is_real_rooted, join_ints};
use veronese_core::simplicial::{
    check_edgewise_hilbert, edgewise, is_f_vector, is_m_sequence, revlex_realize,
};
use veronese_core::veronese::{
    c_count, c_matrix, find_positivity_threshold, veronese_g, veronese_h,
};
use veronese_core::{IntPolynomial, RationalSeries};

use crate::args::{Command, MatrixFormat};
use crate::{facets, verify, Failure, EXIT_FALSE, EXIT_OK};

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn big_json(n: &BigInt) -> Value {
    // arbitrary_precision keeps every digit
    Value::Number(n.to_string().parse::<Number>().expect("decimal integer"))
}

pub(crate) fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Cmatrix { r, d, format } => {
            let m = c_matrix(r, d)?;
            match format {
                MatrixFormat::Tsv => {
                    for row in m.rows() {
                        let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
                        writeln!(out, "{}", cells.join("\t"))?;
                    }
                }
                MatrixFormat::Json => {
                    let rows = m
                        .rows()
                        .iter()
                        .map(|row| Value::Array(row.iter().map(big_json).collect()))
                        .collect();
                    let mut obj = Map::new();
                    obj.insert("r".into(), Value::from(r));
                    obj.insert("d".into(), Value::from(d));
                    obj.insert("rows".into(), Value::Array(rows));
                    writeln!(out, "{}", Value::Object(obj))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Count { r, d, i } => {
            writeln!(out, "{}", c_count(r, d, i))?;
            Ok(EXIT_OK)
        }
        Command::Transform { h, d, r, g } => {
            let h = IntPolynomial::new(h.0);
            if g {
                writeln!(out, "{}", veronese_g(&h, d, r)?)?;
            } else {
                writeln!(out, "{}", join_ints(&veronese_h(&h, d, r)?))?;
            }
            Ok(EXIT_OK)
        }
        Command::Expand { h, d, n } => {
            let series = RationalSeries::new(IntPolynomial::new(h.0), d)?;
            for a in expand(&series, n).values() {
                writeln!(out, "{a}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Characteristic { h, d } => {
            let series = RationalSeries::new(IntPolynomial::new(h.0), d)?;
            writeln!(out, "{}", characteristic(&series))?;
            Ok(EXIT_OK)
        }
        Command::Sturm { poly } => {
            let ok = is_real_rooted(&IntPolynomial::new(poly.0));
            writeln!(out, "real-rooted: {ok}")?;
            Ok(verdict(ok))
        }
        Command::Kk { vector } => {
            let ok = is_f_vector(&vector.0);
            writeln!(out, "{ok}")?;
            Ok(verdict(ok))
        }
        Command::Msequence { vector } => {
            let ok = is_m_sequence(&vector.0);
            writeln!(out, "{ok}")?;
            Ok(verdict(ok))
        }
        Command::Realize { vector } => {
            let complex = revlex_realize(&vector.0)?;
            write!(out, "{complex}")?;
            Ok(EXIT_OK)
        }
        Command::Edgewise { facets: path, r, check_hilbert } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let complex = facets::parse_facets(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            if check_hilbert {
                let hilbert = check_edgewise_hilbert(&complex, r)?;
                writeln!(out, "h-edgewise: {}", join_ints(hilbert.h_edgewise.coeffs()))?;
                writeln!(out, "h-veronese: {}", join_ints(hilbert.h_veronese.coeffs()))?;
                return Ok(verdict(hilbert.pass()));
            }
            let sub = edgewise(&complex, r)?;
            for facet in sub.facet_points() {
                let cells: Vec<String> = facet.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
            Ok(EXIT_OK)
        }
        Command::Threshold { h, d, max_r } => {
            match find_positivity_threshold(&IntPolynomial::new(h.0), d, max_r)? {
                Some(r) => {
                    writeln!(out, "{r}")?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "not-found")?;
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::Verify { rmax, dmax, suite } => {
            let report = verify::run(suite, rmax, dmax)?;
            let text = serde_json::to_string_pretty(&report.to_json())
                .expect("report serializes");
            writeln!(out, "{text}")?;
            Ok(verdict(report.pass()))
        }
    }
}
