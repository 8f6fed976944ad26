use super::BettiTable;

/// Text table with `β_{i,j}` at column `i + 1`, row `j - i - 1`.
///
/// ```text
///       | 1 2
/// ------+----
/// 1     | - -
/// 2     | 3 2
/// ------+----
/// total | 3 2
/// ```
pub fn render_paper_table(t: &BettiTable) -> String {
    let totals = t.totals();
    let ncols = totals.len();
    let row_of = |i: usize, j: usize| j as isize - i as isize - 1;
    let rows: Vec<isize> = match t.entries().map(|((i, j), _)| row_of(i, j)).max() {
        Some(max) => {
            let min = t
                .entries()
                .map(|((i, j), _)| row_of(i, j))
                .min()
                .unwrap_or(1);
            (min.min(1)..=max).collect()
        }
        None => Vec::new(),
    };

    let cell = |r: isize, c: usize| -> String {
        let j = r + c as isize + 1;
        match usize::try_from(j).map(|j| t.get(c, j)) {
            Ok(b) if b > 0 => b.to_string(),
            _ => "-".to_string(),
        }
    };
    let grid: Vec<Vec<String>> = rows
        .iter()
        .map(|&r| (0..ncols).map(|c| cell(r, c)).collect())
        .collect();
    let widths: Vec<usize> = (0..ncols)
        .map(|c| {
            grid.iter()
                .map(|row| row[c].len())
                .chain([(c + 1).to_string().len(), totals[c].to_string().len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let label_width = rows
        .iter()
        .map(|r| r.to_string().len())
        .chain(["total".len()])
        .max()
        .unwrap_or(5);

    let line = |label: &str, cells: &[String]| -> String {
        let mut s = format!("{label:<label_width$} |");
        for (c, v) in cells.iter().enumerate() {
            s.push_str(&format!(" {v:>w$}", w = widths[c]));
        }
        s.push('\n');
        s
    };
    let rule = format!(
        "{}+{}\n",
        "-".repeat(label_width + 1),
        "-".repeat(widths.iter().map(|w| w + 1).sum())
    );

    let header: Vec<String> = (1..=ncols).map(|c| c.to_string()).collect();
    let mut out = line("", &header);
    out.push_str(&rule);
    for (r, row) in rows.iter().zip(&grid) {
        out.push_str(&line(&r.to_string(), row));
    }
    out.push_str(&rule);
    let totals: Vec<String> = totals.iter().map(u64::to_string).collect();
    out.push_str(&line("total", &totals));
    out
}

/// Inverse of [`render_paper_table`] for tests.
#[cfg(test)]
pub(crate) fn parse_paper_table(text: &str) -> BettiTable {
    let mut t = BettiTable::new();
    for line in text.lines().skip(2) {
        let Some((label, cells)) = line.split_once('|') else {
            continue;
        };
        let Ok(r) = label.trim().parse::<isize>() else {
            continue;
        };
        for (c, v) in cells.split_whitespace().enumerate() {
            if let Ok(b) = v.parse::<u64>() {
                t.add(c, (r + c as isize + 1) as usize, b);
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn four_cycle() {
        let t = BettiTable::from_entries([((0, 2), 4), ((1, 3), 4), ((2, 4), 1)]);
        assert_eq!(
            render_paper_table(&t),
            "      | 1 2 3\n\
             ------+------\n\
             1     | 4 4 1\n\
             ------+------\n\
             total | 4 4 1\n"
        );
    }

    #[test]
    fn intersection_of_second_example() {
        let t = BettiTable::from_entries([((0, 3), 6), ((1, 4), 6), ((2, 6), 1)]);
        let s = render_paper_table(&t);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[2], "1     | - - -");
        assert_eq!(lines[3], "2     | 6 6 -");
        assert_eq!(lines[4], "3     | - - 1");
        assert_eq!(lines[6], "total | 6 6 1");
    }

    #[test]
    fn wide_entries_are_aligned() {
        let t = BettiTable::from_entries([((0, 2), 8), ((1, 3), 12), ((1, 4), 2)]);
        let s = render_paper_table(&t);
        assert!(s.contains("1     | 8 12\n"));
        assert!(s.contains("2     | -  2\n"));
        assert!(s.contains("total | 8 14\n"));
    }

    #[test]
    fn empty_table() {
        assert_eq!(
            render_paper_table(&BettiTable::new()),
            "      |\n------+\n------+\ntotal |\n"
        );
    }

    proptest! {
        #[test]
        fn round_trip(entries in prop::collection::btree_map((0usize..5, 0usize..6), 1u64..200, 0..10)) {
            // keep j >= i + 1 as for any proper ideal
            let t = BettiTable::from_entries(entries.into_iter().map(|((i, d), b)| ((i, i + 1 + d), b)));
            prop_assert_eq!(parse_paper_table(&render_paper_table(&t)), t);
        }
    }
}
