//! The single tokenizer used everywhere: queries, table fields, entity
//! fields, and embedding lookup all go through [`tokenize`] so that term
//! statistics line up across modules.

/// Lowercase, split on runs of non-alphanumeric characters, drop empties.
/// No stemming, no stopword removal.
pub fn tokenize(text: &str) -> Vec<String> {
    text.to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_owned)
        .collect()
}

/// Heading labels are compared as whole strings, not token streams:
/// trim and lowercase only.
pub fn normalize_heading(label: &str) -> String {
    label.trim().to_lowercase()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenize_splits_on_non_alphanumeric_runs() {
        assert_eq!(tokenize("World  Cup--2018!"), ["world", "cup", "2018"]);
        assert_eq!(tokenize("laptops cpu"), ["laptops", "cpu"]);
    }

    #[test]
    fn tokenize_drops_empty_tokens() {
        assert_eq!(tokenize("  ---  "), Vec::<String>::new());
        assert_eq!(tokenize(""), Vec::<String>::new());
    }

    #[test]
    fn normalize_heading_keeps_inner_whitespace() {
        assert_eq!(normalize_heading("  Serial Numbers "), "serial numbers");
    }
}
