"""Documents, corpus construction and the command line."""
from .corpus import (Entry, PROFILES, build_corpus, composable_triples,
                     corpus_entries, load_corpus, write_corpus)
from .documents import (KINDS, Document, load_file, load_value, parse_document,
                        presentation_to_document, read_document,
                        serialize_document, write_document)
