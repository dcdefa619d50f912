//! OHLCV parsing, validation, and exponential smoothing.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::error::{DataError, Result};

pub const CSV_HEADER: &str = "date,open,high,low,close,volume";

/// One daily bar. Prices are positive currency units, volume a share count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OhlcvBar {
    pub date: NaiveDate,
    pub open: f64,
    pub high: f64,
    pub low: f64,
    pub close: f64,
    pub volume: u64,
}

/// A date-ordered bar series for one ticker.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OhlcvSeries {
    pub symbol: String,
    pub bars: Vec<OhlcvBar>,
}

impl OhlcvSeries {
    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn closes(&self) -> Vec<f64> {
        self.bars.iter().map(|b| b.close).collect()
    }

    pub fn highs(&self) -> Vec<f64> {
        self.bars.iter().map(|b| b.high).collect()
    }

    pub fn lows(&self) -> Vec<f64> {
        self.bars.iter().map(|b| b.low).collect()
    }

    pub fn volumes(&self) -> Vec<u64> {
        self.bars.iter().map(|b| b.volume).collect()
    }

    /// Canonical CSV form: pinned header, one row per bar, `\n` endings,
    /// shortest round-trip float formatting.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(32 * (self.bars.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for bar in &self.bars {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                bar.date.format("%Y-%m-%d"),
                bar.open,
                bar.high,
                bar.low,
                bar.close,
                bar.volume
            ));
        }
        out
    }
}

/// Exponentially smoothed close series, aligned with its source bars.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmoothedSeries {
    /// Smoothing weight in (0, 1]; 1 reproduces the input exactly.
    pub alpha: f64,
    pub values: Vec<f64>,
}

/// One failed validation check, anchored to a bar index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    /// `high` is below the larger of open and close.
    HighBelowBody,
    /// `low` is above the smaller of open and close.
    LowAboveBody,
    /// A price field is zero or negative.
    NonPositivePrice,
    /// Date is not strictly greater than the previous bar's date
    /// (duplicates count).
    NonIncreasingDate,
    /// The series holds no bars at all.
    EmptySeries,
}

impl std::fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            ViolationKind::HighBelowBody => "high below max(open, close)",
            ViolationKind::LowAboveBody => "low above min(open, close)",
            ViolationKind::NonPositivePrice => "non-positive price",
            ViolationKind::NonIncreasingDate => "date not strictly increasing",
            ViolationKind::EmptySeries => "series is empty",
        };
        f.write_str(msg)
    }
}

/// Outcome of [`validate_series`]: `ok` iff no violations were found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Parse a strict `date,open,high,low,close,volume` CSV document.
///
/// The header must match byte-for-byte (after optional trailing `\r`),
/// dates are ISO-8601 `YYYY-MM-DD`, decimals use `.`, and row order is
/// preserved. Bar invariants are *not* checked here; see
/// [`validate_series`].
pub fn parse_ohlcv_csv(text: &str, symbol: &str) -> Result<OhlcvSeries> {
    let mut lines = text.split('\n').enumerate();

    let header = match lines.next() {
        Some((_, line)) => line.strip_suffix('\r').unwrap_or(line),
        None => return Err(DataError::EmptyFile.into()),
    };
    if header != CSV_HEADER {
        return Err(DataError::MalformedHeader {
            found: header.to_string(),
        }
        .into());
    }

    let mut bars = Vec::new();
    for (idx, raw) in lines {
        let line_no = idx + 1; // 1-based, header is line 1
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.is_empty() {
            // Allow a trailing newline; blank interior lines are rejected
            // by the field-count check below when anything follows them.
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(DataError::RowParse {
                line: line_no,
                column: "row",
                message: format!("expected 6 fields, found {}", fields.len()),
            }
            .into());
        }
        let date = parse_field(fields[0], line_no, "date", |s| {
            NaiveDate::parse_from_str(s, "%Y-%m-%d").map_err(|e| e.to_string())
        })?;
        let open = parse_price(fields[1], line_no, "open")?;
        let high = parse_price(fields[2], line_no, "high")?;
        let low = parse_price(fields[3], line_no, "low")?;
        let close = parse_price(fields[4], line_no, "close")?;
        let volume = parse_field(fields[5], line_no, "volume", |s| {
            s.parse::<u64>().map_err(|e| e.to_string())
        })?;
        bars.push(OhlcvBar {
            date,
            open,
            high,
            low,
            close,
            volume,
        });
    }

    if bars.is_empty() {
        return Err(DataError::EmptyFile.into());
    }
    Ok(OhlcvSeries {
        symbol: symbol.to_string(),
        bars,
    })
}

fn parse_field<T>(
    raw: &str,
    line: usize,
    column: &'static str,
    parse: impl Fn(&str) -> std::result::Result<T, String>,
) -> Result<T> {
    parse(raw).map_err(|message| {
        DataError::RowParse {
            line,
            column,
            message,
        }
        .into()
    })
}

fn parse_price(raw: &str, line: usize, column: &'static str) -> Result<f64> {
    let value = parse_field(raw, line, column, |s| {
        s.parse::<f64>().map_err(|e| e.to_string())
    })?;
    if !value.is_finite() {
        return Err(DataError::RowParse {
            line,
            column,
            message: "price must be finite".to_string(),
        }
        .into());
    }
    Ok(value)
}

/// Check every bar invariant and date monotonicity; violations are
/// reported, never thrown.
pub fn validate_series(series: &OhlcvSeries) -> ValidationReport {
    let mut violations = Vec::new();
    if series.bars.is_empty() {
        violations.push(Violation {
            index: 0,
            kind: ViolationKind::EmptySeries,
        });
    }
    for (i, bar) in series.bars.iter().enumerate() {
        if [bar.open, bar.high, bar.low, bar.close]
            .iter()
            .any(|&p| p <= 0.0)
        {
            violations.push(Violation {
                index: i,
                kind: ViolationKind::NonPositivePrice,
            });
        }
        if bar.high < bar.open.max(bar.close) {
            violations.push(Violation {
                index: i,
                kind: ViolationKind::HighBelowBody,
            });
        }
        if bar.low > bar.open.min(bar.close) {
            violations.push(Violation {
                index: i,
                kind: ViolationKind::LowAboveBody,
            });
        }
        if i > 0 && bar.date <= series.bars[i - 1].date {
            violations.push(Violation {
                index: i,
                kind: ViolationKind::NonIncreasingDate,
            });
        }
    }
    ValidationReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// Exponential smoothing: `S_0 = Y_0`, then `S_t = alpha*Y_t + (1-alpha)*S_{t-1}`.
///
/// With `alpha = 1` the output equals the input bitwise (for positive
/// finite values); smaller weights lean harder on history.
pub fn exponential_smooth(close: &[f64], alpha: f64) -> Result<SmoothedSeries> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(DataError::InvalidAlpha { alpha }.into());
    }
    if close.is_empty() {
        return Err(DataError::EmptySeries.into());
    }
    let mut values = Vec::with_capacity(close.len());
    let mut prev = close[0];
    values.push(prev);
    for &y in &close[1..] {
        prev = alpha * y + (1.0 - alpha) * prev;
        values.push(prev);
    }
    Ok(SmoothedSeries { alpha, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn bar(date: &str, open: f64, high: f64, low: f64, close: f64, volume: u64) -> OhlcvBar {
        OhlcvBar {
            date: date.parse().unwrap(),
            open,
            high,
            low,
            close,
            volume,
        }
    }

    #[test]
    fn parses_single_row() {
        let text = "date,open,high,low,close,volume\n2020-01-02,100,101,99,100.5,1000\n";
        let series = parse_ohlcv_csv(text, "TEST").unwrap();
        assert_eq!(series.len(), 1);
        assert_eq!(series.bars[0].close, 100.5);
        assert_eq!(series.bars[0].volume, 1000);
        assert_eq!(series.bars[0].date, "2020-01-02".parse().unwrap());
    }

    #[test]
    fn accepts_crlf() {
        let text = "date,open,high,low,close,volume\r\n2020-01-02,100,101,99,100.5,1000\r\n";
        let series = parse_ohlcv_csv(text, "TEST").unwrap();
        assert_eq!(series.len(), 1);
    }

    #[test]
    fn header_only_is_empty_file() {
        let err = parse_ohlcv_csv("date,open,high,low,close,volume\n", "T").unwrap_err();
        assert!(matches!(err, Error::Data(DataError::EmptyFile)));
    }

    #[test]
    fn wrong_header_is_rejected() {
        let err = parse_ohlcv_csv("date,open,high,low,close\nx", "T").unwrap_err();
        assert!(matches!(err, Error::Data(DataError::MalformedHeader { .. })));
    }

    #[test]
    fn bad_field_reports_line_and_column() {
        let text = "date,open,high,low,close,volume\n2020-01-02,100,101,99,oops,1000\n";
        match parse_ohlcv_csv(text, "T").unwrap_err() {
            Error::Data(DataError::RowParse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, "close");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn validate_accepts_clean_series() {
        let series = OhlcvSeries {
            symbol: "T".into(),
            bars: vec![
                bar("2020-01-02", 10.0, 11.0, 9.5, 10.5, 100),
                bar("2020-01-03", 10.5, 10.8, 10.0, 10.2, 90),
            ],
        };
        let report = validate_series(&series);
        assert!(report.ok, "{:?}", report.violations);
    }

    #[test]
    fn validate_flags_high_below_low_bar() {
        let series = OhlcvSeries {
            symbol: "T".into(),
            bars: vec![
                bar("2020-01-02", 10.0, 11.0, 9.5, 10.5, 100),
                bar("2020-01-03", 10.0, 9.0, 10.5, 10.0, 100), // high < low
            ],
        };
        let report = validate_series(&series);
        assert!(!report.ok);
        assert!(report.violations.iter().all(|v| v.index == 1));
        assert!(!report.violations.is_empty());
    }

    #[test]
    fn validate_flags_duplicate_date() {
        let series = OhlcvSeries {
            symbol: "T".into(),
            bars: vec![
                bar("2020-01-02", 10.0, 11.0, 9.5, 10.5, 100),
                bar("2020-01-02", 10.0, 11.0, 9.5, 10.5, 100),
            ],
        };
        let report = validate_series(&series);
        assert_eq!(
            report.violations,
            vec![Violation {
                index: 1,
                kind: ViolationKind::NonIncreasingDate
            }]
        );
    }

    #[test]
    fn smooth_alpha_one_is_identity() {
        let y = vec![3.25, 1.5, 9.75, 2.0];
        let s = exponential_smooth(&y, 1.0).unwrap();
        assert_eq!(s.values, y);
    }

    #[test]
    fn smooth_constant_series_is_fixed_point() {
        let y = vec![7.5; 20];
        let s = exponential_smooth(&y, 0.3).unwrap();
        assert_eq!(s.values, y);
    }

    #[test]
    fn smooth_hand_example() {
        let s = exponential_smooth(&[2.0, 4.0], 0.5).unwrap();
        assert_eq!(s.values, vec![2.0, 3.0]);
    }

    #[test]
    fn smooth_rejects_bad_alpha() {
        for alpha in [0.0, -0.5, 1.5, f64::NAN] {
            let err = exponential_smooth(&[1.0], alpha).unwrap_err();
            assert!(matches!(err, Error::Data(DataError::InvalidAlpha { .. })));
        }
        let err = exponential_smooth(&[], 0.5).unwrap_err();
        assert!(matches!(err, Error::Data(DataError::EmptySeries)));
    }
}
