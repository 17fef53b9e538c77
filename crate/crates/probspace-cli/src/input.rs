//! CSV ingestion: labeled 2x2 count tables and labeled proportion samples.
//! Every parse failure reports the 1-based line it came from.

use std::path::Path;

use probspace::{ProportionSample, TwoByTwoTable};

/// Reads `label,a,b,c,d` rows into labeled tables, in file order.
///
/// Counts must be nonnegative integers; whether a zero cell is acceptable
/// is decided later by the analysis, not here.
pub fn read_table_csv(path: &Path) -> Result<Vec<(String, TwoByTwoTable)>, String> {
    let mut reader = open(path, &["label", "a", "b", "c", "d"])?;
    let mut tables = Vec::new();
    for row in reader.records() {
        let record = row.map_err(|e| format!("{}: {e}", path.display()))?;
        let line = line_of(&record);
        if record.len() != 5 {
            return Err(format!(
                "{}: line {line}: expected 5 fields, found {}",
                path.display(),
                record.len()
            ));
        }
        let count = |index: usize, name: &str| {
            record[index].parse::<u64>().map_err(|_| {
                format!(
                    "{}: line {line}: {name} must be a nonnegative integer, got {:?}",
                    path.display(),
                    &record[index]
                )
            })
        };
        tables.push((
            record[0].to_owned(),
            TwoByTwoTable::new(count(1, "a")?, count(2, "b")?, count(3, "c")?, count(4, "d")?),
        ));
    }
    Ok(tables)
}

/// Reads `label,value` rows into one sample per distinct label, labels in
/// first-appearance order and values in file order within each label.
pub fn read_sample_csv(path: &Path) -> Result<Vec<ProportionSample>, String> {
    let mut reader = open(path, &["label", "value"])?;
    let mut groups: Vec<(String, Vec<f64>)> = Vec::new();
    for row in reader.records() {
        let record = row.map_err(|e| format!("{}: {e}", path.display()))?;
        let line = line_of(&record);
        if record.len() != 2 {
            return Err(format!(
                "{}: line {line}: expected 2 fields, found {}",
                path.display(),
                record.len()
            ));
        }
        let value: f64 = record[1].parse().map_err(|_| {
            format!("{}: line {line}: value is not a number, got {:?}", path.display(), &record[1])
        })?;
        if !(value > 0.0 && value < 1.0) {
            return Err(format!(
                "{}: line {line}: value {value} is outside the open interval (0, 1)",
                path.display()
            ));
        }
        let label = &record[0];
        match groups.iter_mut().find(|(name, _)| name == label) {
            Some((_, values)) => values.push(value),
            None => groups.push((label.to_owned(), vec![value])),
        }
    }
    groups
        .into_iter()
        .map(|(label, values)| {
            ProportionSample::from_values(label, &values).map_err(|e| e.to_string())
        })
        .collect()
}

fn open(path: &Path, header: &[&str]) -> Result<csv::Reader<std::fs::File>, String> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_path(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let found = reader.headers().map_err(|e| format!("{}: {e}", path.display()))?;
    if found.iter().collect::<Vec<_>>() != header {
        return Err(format!(
            "{}: expected header {:?}, found {:?}",
            path.display(),
            header.join(","),
            found.iter().collect::<Vec<_>>().join(",")
        ));
    }
    Ok(reader)
}

fn line_of(record: &csv::StringRecord) -> u64 {
    record.position().map_or(0, |p| p.line())
}
