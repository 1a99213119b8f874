use std::io::Write;

use serde_json::Value;

use crate::config::Format;
use crate::error::CliError;

/// A finished run: a table of cells shared by the text and CSV renderings,
/// a JSON document, and notes printed below the text table.
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    pub json: Value,
    /// Some check failed (exit code 1).
    pub failed: bool,
}

impl Report {
    pub fn render(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Text => self.render_text(out)?,
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)
                    .map_err(std::io::Error::other)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }

    fn render_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        writeln!(out, "{}", line(self.columns.clone()))?;
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        writeln!(out, "{}", line(rule.iter().map(String::as_str).collect()))?;
        for row in &self.rows {
            writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
        }
        for note in &self.notes {
            writeln!(out, "{note}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            columns: vec!["algebra", "mu"],
            rows: vec![
                vec!["L3_2".into(), "3".into()],
                vec!["L6_19?eps=-1".into(), "4".into()],
            ],
            notes: vec!["done".into()],
            json: serde_json::json!({"rows": []}),
            failed: false,
        }
    }

    fn render(format: Format) -> String {
        let mut buf = Vec::new();
        sample().render(format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn text_is_aligned() {
        let text = render(Format::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "algebra       mu");
        assert_eq!(lines[2], "L3_2          3");
        assert_eq!(lines[4], "done");
    }

    #[test]
    fn csv_has_header_and_rows() {
        assert_eq!(render(Format::Csv), "algebra,mu\nL3_2,3\nL6_19?eps=-1,4\n");
    }
}
