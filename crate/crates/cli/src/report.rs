use std::fmt::Display;

/// A `key<TAB>value` report, printed in insertion order.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.put("command", command);
        r
    }

    pub fn put(&mut self, key: &str, value: impl Display) -> &mut Self {
        // keep the format line-oriented whatever the value contains
        let value = value.to_string().replace(['\t', '\n'], " ");
        self.lines.push((key.to_string(), value));
        self
    }

    pub fn render(&self) -> String {
        self.lines.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
    }
}

pub fn join<T: Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
