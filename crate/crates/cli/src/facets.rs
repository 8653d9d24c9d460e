use veronese_core::SimplicialComplex;

/// Reads the facet file format: one facet per line, labels >= 1 separated
/// by single spaces; blank lines and lines starting with '#' are skipped.
/// A file with no facets describes the complex `{∅}`.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex, String> {
    let mut facets = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let facet = line
            .split(' ')
            .map(|tok| match tok.parse::<u32>() {
                Ok(v) if v >= 1 && tok.bytes().all(|b| b.is_ascii_digit()) => Ok(v),
                _ => Err(format!("line {}: '{tok}' is not a vertex label >= 1", no + 1)),
            })
            .collect::<Result<Vec<u32>, String>>()?;
        facets.push(facet);
    }
    Ok(SimplicialComplex::from_facets(facets))
}
