"""Composition tables, generated from the oracles in ``qualitative`` and checked by the test suite."""

RCC8_TABLE = {
    ('DC', 'DC'): frozenset({'DC', 'EC', 'PO', 'EQ', 'TPP', 'NTPP', 'TPPi', 'NTPPi'}),
    ('DC', 'EC'): frozenset({'DC', 'EC', 'PO', 'TPP', 'NTPP'}),
    ('DC', 'PO'): frozenset({'DC', 'EC', 'PO', 'TPP', 'NTPP'}),
    ('DC', 'EQ'): frozenset({'DC'}),
    ('DC', 'TPP'): frozenset({'DC', 'EC', 'PO', 'TPP', 'NTPP'}),
    ('DC', 'NTPP'): frozenset({'DC', 'EC', 'PO', 'TPP', 'NTPP'}),
    ('DC', 'TPPi'): frozenset({'DC'}),
    ('DC', 'NTPPi'): frozenset({'DC'}),
    ('EC', 'DC'): frozenset({'DC', 'EC', 'PO', 'TPPi', 'NTPPi'}),
    ('EC', 'EC'): frozenset({'DC', 'EC', 'PO', 'EQ', 'TPP', 'TPPi'}),
    ('EC', 'PO'): frozenset({'DC', 'EC', 'PO', 'TPP', 'NTPP'}),
    ('EC', 'EQ'): frozenset({'EC'}),
    ('EC', 'TPP'): frozenset({'EC', 'PO', 'TPP', 'NTPP'}),
    ('EC', 'NTPP'): frozenset({'PO', 'TPP', 'NTPP'}),
    ('EC', 'TPPi'): frozenset({'DC', 'EC'}),
    ('EC', 'NTPPi'): frozenset({'DC'}),
    ('PO', 'DC'): frozenset({'DC', 'EC', 'PO', 'TPPi', 'NTPPi'}),
    ('PO', 'EC'): frozenset({'DC', 'EC', 'PO', 'TPPi', 'NTPPi'}),
    ('PO', 'PO'): frozenset({'DC', 'EC', 'PO', 'EQ', 'TPP', 'NTPP', 'TPPi', 'NTPPi'}),
    ('PO', 'EQ'): frozenset({'PO'}),
    ('PO', 'TPP'): frozenset({'PO', 'TPP', 'NTPP'}),
    ('PO', 'NTPP'): frozenset({'PO', 'TPP', 'NTPP'}),
    ('PO', 'TPPi'): frozenset({'DC', 'EC', 'PO', 'TPPi', 'NTPPi'}),
    ('PO', 'NTPPi'): frozenset({'DC', 'EC', 'PO', 'TPPi', 'NTPPi'}),
    ('EQ', 'DC'): frozenset({'DC'}),
    ('EQ', 'EC'): frozenset({'EC'}),
    ('EQ', 'PO'): frozenset({'PO'}),
    ('EQ', 'EQ'): frozenset({'EQ'}),
    ('EQ', 'TPP'): frozenset({'TPP'}),
    ('EQ', 'NTPP'): frozenset({'NTPP'}),
    ('EQ', 'TPPi'): frozenset({'TPPi'}),
    ('EQ', 'NTPPi'): frozenset({'NTPPi'}),
    ('TPP', 'DC'): frozenset({'DC'}),
    ('TPP', 'EC'): frozenset({'DC', 'EC'}),
    ('TPP', 'PO'): frozenset({'DC', 'EC', 'PO', 'TPP', 'NTPP'}),
    ('TPP', 'EQ'): frozenset({'TPP'}),
    ('TPP', 'TPP'): frozenset({'TPP', 'NTPP'}),
    ('TPP', 'NTPP'): frozenset({'NTPP'}),
    ('TPP', 'TPPi'): frozenset({'DC', 'EC', 'PO', 'EQ', 'TPP', 'TPPi'}),
    ('TPP', 'NTPPi'): frozenset({'DC', 'EC', 'PO', 'TPPi', 'NTPPi'}),
    ('NTPP', 'DC'): frozenset({'DC'}),
    ('NTPP', 'EC'): frozenset({'DC'}),
    ('NTPP', 'PO'): frozenset({'DC', 'EC', 'PO', 'TPP', 'NTPP'}),
    ('NTPP', 'EQ'): frozenset({'NTPP'}),
    ('NTPP', 'TPP'): frozenset({'NTPP'}),
    ('NTPP', 'NTPP'): frozenset({'NTPP'}),
    ('NTPP', 'TPPi'): frozenset({'DC', 'EC', 'PO', 'TPP', 'NTPP'}),
    ('NTPP', 'NTPPi'): frozenset({'DC', 'EC', 'PO', 'EQ', 'TPP', 'NTPP', 'TPPi', 'NTPPi'}),
    ('TPPi', 'DC'): frozenset({'DC', 'EC', 'PO', 'TPPi', 'NTPPi'}),
    ('TPPi', 'EC'): frozenset({'EC', 'PO', 'TPPi', 'NTPPi'}),
    ('TPPi', 'PO'): frozenset({'PO', 'TPPi', 'NTPPi'}),
    ('TPPi', 'EQ'): frozenset({'TPPi'}),
    ('TPPi', 'TPP'): frozenset({'PO', 'EQ', 'TPP', 'TPPi'}),
    ('TPPi', 'NTPP'): frozenset({'PO', 'TPP', 'NTPP'}),
    ('TPPi', 'TPPi'): frozenset({'TPPi', 'NTPPi'}),
    ('TPPi', 'NTPPi'): frozenset({'NTPPi'}),
    ('NTPPi', 'DC'): frozenset({'DC', 'EC', 'PO', 'TPPi', 'NTPPi'}),
    ('NTPPi', 'EC'): frozenset({'PO', 'TPPi', 'NTPPi'}),
    ('NTPPi', 'PO'): frozenset({'PO', 'TPPi', 'NTPPi'}),
    ('NTPPi', 'EQ'): frozenset({'NTPPi'}),
    ('NTPPi', 'TPP'): frozenset({'PO', 'TPPi', 'NTPPi'}),
    ('NTPPi', 'NTPP'): frozenset({'PO', 'EQ', 'TPP', 'NTPP', 'TPPi', 'NTPPi'}),
    ('NTPPi', 'TPPi'): frozenset({'NTPPi'}),
    ('NTPPi', 'NTPPi'): frozenset({'NTPPi'}),
}

ALLEN_TABLE = {
    ('before', 'before'): frozenset({'before'}),
    ('before', 'meets'): frozenset({'before'}),
    ('before', 'overlaps'): frozenset({'before'}),
    ('before', 'starts'): frozenset({'before'}),
    ('before', 'during'): frozenset({'before', 'meets', 'overlaps', 'starts', 'during'}),
    ('before', 'finishes'): frozenset({'before', 'meets', 'overlaps', 'starts', 'during'}),
    ('before', 'equal'): frozenset({'before'}),
    ('before', 'after'): frozenset({'before', 'meets', 'overlaps', 'starts', 'during', 'finishes', 'equal', 'after', 'met-by', 'overlapped-by', 'started-by', 'contains', 'finished-by'}),
    ('before', 'met-by'): frozenset({'before', 'meets', 'overlaps', 'starts', 'during'}),
    ('before', 'overlapped-by'): frozenset({'before', 'meets', 'overlaps', 'starts', 'during'}),
    ('before', 'started-by'): frozenset({'before'}),
    ('before', 'contains'): frozenset({'before'}),
    ('before', 'finished-by'): frozenset({'before'}),
    ('meets', 'before'): frozenset({'before'}),
    ('meets', 'meets'): frozenset({'before'}),
    ('meets', 'overlaps'): frozenset({'before'}),
    ('meets', 'starts'): frozenset({'meets'}),
    ('meets', 'during'): frozenset({'overlaps', 'starts', 'during'}),
    ('meets', 'finishes'): frozenset({'overlaps', 'starts', 'during'}),
    ('meets', 'equal'): frozenset({'meets'}),
    ('meets', 'after'): frozenset({'after', 'met-by', 'overlapped-by', 'started-by', 'contains'}),
    ('meets', 'met-by'): frozenset({'finishes', 'equal', 'finished-by'}),
    ('meets', 'overlapped-by'): frozenset({'overlaps', 'starts', 'during'}),
    ('meets', 'started-by'): frozenset({'meets'}),
    ('meets', 'contains'): frozenset({'before'}),
    ('meets', 'finished-by'): frozenset({'before'}),
    ('overlaps', 'before'): frozenset({'before'}),
    ('overlaps', 'meets'): frozenset({'before'}),
    ('overlaps', 'overlaps'): frozenset({'before', 'meets', 'overlaps'}),
    ('overlaps', 'starts'): frozenset({'overlaps'}),
    ('overlaps', 'during'): frozenset({'overlaps', 'starts', 'during'}),
    ('overlaps', 'finishes'): frozenset({'overlaps', 'starts', 'during'}),
    ('overlaps', 'equal'): frozenset({'overlaps'}),
    ('overlaps', 'after'): frozenset({'after', 'met-by', 'overlapped-by', 'started-by', 'contains'}),
    ('overlaps', 'met-by'): frozenset({'overlapped-by', 'started-by', 'contains'}),
    ('overlaps', 'overlapped-by'): frozenset({'overlaps', 'starts', 'during', 'finishes', 'equal', 'overlapped-by', 'started-by', 'contains', 'finished-by'}),
    ('overlaps', 'started-by'): frozenset({'overlaps', 'contains', 'finished-by'}),
    ('overlaps', 'contains'): frozenset({'before', 'meets', 'overlaps', 'contains', 'finished-by'}),
    ('overlaps', 'finished-by'): frozenset({'before', 'meets', 'overlaps'}),
    ('starts', 'before'): frozenset({'before'}),
    ('starts', 'meets'): frozenset({'before'}),
    ('starts', 'overlaps'): frozenset({'before', 'meets', 'overlaps'}),
    ('starts', 'starts'): frozenset({'starts'}),
    ('starts', 'during'): frozenset({'during'}),
    ('starts', 'finishes'): frozenset({'during'}),
    ('starts', 'equal'): frozenset({'starts'}),
    ('starts', 'after'): frozenset({'after'}),
    ('starts', 'met-by'): frozenset({'met-by'}),
    ('starts', 'overlapped-by'): frozenset({'during', 'finishes', 'overlapped-by'}),
    ('starts', 'started-by'): frozenset({'starts', 'equal', 'started-by'}),
    ('starts', 'contains'): frozenset({'before', 'meets', 'overlaps', 'contains', 'finished-by'}),
    ('starts', 'finished-by'): frozenset({'before', 'meets', 'overlaps'}),
    ('during', 'before'): frozenset({'before'}),
    ('during', 'meets'): frozenset({'before'}),
    ('during', 'overlaps'): frozenset({'before', 'meets', 'overlaps', 'starts', 'during'}),
    ('during', 'starts'): frozenset({'during'}),
    ('during', 'during'): frozenset({'during'}),
    ('during', 'finishes'): frozenset({'during'}),
    ('during', 'equal'): frozenset({'during'}),
    ('during', 'after'): frozenset({'after'}),
    ('during', 'met-by'): frozenset({'after'}),
    ('during', 'overlapped-by'): frozenset({'during', 'finishes', 'after', 'met-by', 'overlapped-by'}),
    ('during', 'started-by'): frozenset({'during', 'finishes', 'after', 'met-by', 'overlapped-by'}),
    ('during', 'contains'): frozenset({'before', 'meets', 'overlaps', 'starts', 'during', 'finishes', 'equal', 'after', 'met-by', 'overlapped-by', 'started-by', 'contains', 'finished-by'}),
    ('during', 'finished-by'): frozenset({'before', 'meets', 'overlaps', 'starts', 'during'}),
    ('finishes', 'before'): frozenset({'before'}),
    ('finishes', 'meets'): frozenset({'meets'}),
    ('finishes', 'overlaps'): frozenset({'overlaps', 'starts', 'during'}),
    ('finishes', 'starts'): frozenset({'during'}),
    ('finishes', 'during'): frozenset({'during'}),
    ('finishes', 'finishes'): frozenset({'finishes'}),
    ('finishes', 'equal'): frozenset({'finishes'}),
    ('finishes', 'after'): frozenset({'after'}),
    ('finishes', 'met-by'): frozenset({'after'}),
    ('finishes', 'overlapped-by'): frozenset({'after', 'met-by', 'overlapped-by'}),
    ('finishes', 'started-by'): frozenset({'after', 'met-by', 'overlapped-by'}),
    ('finishes', 'contains'): frozenset({'after', 'met-by', 'overlapped-by', 'started-by', 'contains'}),
    ('finishes', 'finished-by'): frozenset({'finishes', 'equal', 'finished-by'}),
    ('equal', 'before'): frozenset({'before'}),
    ('equal', 'meets'): frozenset({'meets'}),
    ('equal', 'overlaps'): frozenset({'overlaps'}),
    ('equal', 'starts'): frozenset({'starts'}),
    ('equal', 'during'): frozenset({'during'}),
    ('equal', 'finishes'): frozenset({'finishes'}),
    ('equal', 'equal'): frozenset({'equal'}),
    ('equal', 'after'): frozenset({'after'}),
    ('equal', 'met-by'): frozenset({'met-by'}),
    ('equal', 'overlapped-by'): frozenset({'overlapped-by'}),
    ('equal', 'started-by'): frozenset({'started-by'}),
    ('equal', 'contains'): frozenset({'contains'}),
    ('equal', 'finished-by'): frozenset({'finished-by'}),
    ('after', 'before'): frozenset({'before', 'meets', 'overlaps', 'starts', 'during', 'finishes', 'equal', 'after', 'met-by', 'overlapped-by', 'started-by', 'contains', 'finished-by'}),
    ('after', 'meets'): frozenset({'during', 'finishes', 'after', 'met-by', 'overlapped-by'}),
    ('after', 'overlaps'): frozenset({'during', 'finishes', 'after', 'met-by', 'overlapped-by'}),
    ('after', 'starts'): frozenset({'during', 'finishes', 'after', 'met-by', 'overlapped-by'}),
    ('after', 'during'): frozenset({'during', 'finishes', 'after', 'met-by', 'overlapped-by'}),
    ('after', 'finishes'): frozenset({'after'}),
    ('after', 'equal'): frozenset({'after'}),
    ('after', 'after'): frozenset({'after'}),
    ('after', 'met-by'): frozenset({'after'}),
    ('after', 'overlapped-by'): frozenset({'after'}),
    ('after', 'started-by'): frozenset({'after'}),
    ('after', 'contains'): frozenset({'after'}),
    ('after', 'finished-by'): frozenset({'after'}),
    ('met-by', 'before'): frozenset({'before', 'meets', 'overlaps', 'contains', 'finished-by'}),
    ('met-by', 'meets'): frozenset({'starts', 'equal', 'started-by'}),
    ('met-by', 'overlaps'): frozenset({'during', 'finishes', 'overlapped-by'}),
    ('met-by', 'starts'): frozenset({'during', 'finishes', 'overlapped-by'}),
    ('met-by', 'during'): frozenset({'during', 'finishes', 'overlapped-by'}),
    ('met-by', 'finishes'): frozenset({'met-by'}),
    ('met-by', 'equal'): frozenset({'met-by'}),
    ('met-by', 'after'): frozenset({'after'}),
    ('met-by', 'met-by'): frozenset({'after'}),
    ('met-by', 'overlapped-by'): frozenset({'after'}),
    ('met-by', 'started-by'): frozenset({'after'}),
    ('met-by', 'contains'): frozenset({'after'}),
    ('met-by', 'finished-by'): frozenset({'met-by'}),
    ('overlapped-by', 'before'): frozenset({'before', 'meets', 'overlaps', 'contains', 'finished-by'}),
    ('overlapped-by', 'meets'): frozenset({'overlaps', 'contains', 'finished-by'}),
    ('overlapped-by', 'overlaps'): frozenset({'overlaps', 'starts', 'during', 'finishes', 'equal', 'overlapped-by', 'started-by', 'contains', 'finished-by'}),
    ('overlapped-by', 'starts'): frozenset({'during', 'finishes', 'overlapped-by'}),
    ('overlapped-by', 'during'): frozenset({'during', 'finishes', 'overlapped-by'}),
    ('overlapped-by', 'finishes'): frozenset({'overlapped-by'}),
    ('overlapped-by', 'equal'): frozenset({'overlapped-by'}),
    ('overlapped-by', 'after'): frozenset({'after'}),
    ('overlapped-by', 'met-by'): frozenset({'after'}),
    ('overlapped-by', 'overlapped-by'): frozenset({'after', 'met-by', 'overlapped-by'}),
    ('overlapped-by', 'started-by'): frozenset({'after', 'met-by', 'overlapped-by'}),
    ('overlapped-by', 'contains'): frozenset({'after', 'met-by', 'overlapped-by', 'started-by', 'contains'}),
    ('overlapped-by', 'finished-by'): frozenset({'overlapped-by', 'started-by', 'contains'}),
    ('started-by', 'before'): frozenset({'before', 'meets', 'overlaps', 'contains', 'finished-by'}),
    ('started-by', 'meets'): frozenset({'overlaps', 'contains', 'finished-by'}),
    ('started-by', 'overlaps'): frozenset({'overlaps', 'contains', 'finished-by'}),
    ('started-by', 'starts'): frozenset({'starts', 'equal', 'started-by'}),
    ('started-by', 'during'): frozenset({'during', 'finishes', 'overlapped-by'}),
    ('started-by', 'finishes'): frozenset({'overlapped-by'}),
    ('started-by', 'equal'): frozenset({'started-by'}),
    ('started-by', 'after'): frozenset({'after'}),
    ('started-by', 'met-by'): frozenset({'met-by'}),
    ('started-by', 'overlapped-by'): frozenset({'overlapped-by'}),
    ('started-by', 'started-by'): frozenset({'started-by'}),
    ('started-by', 'contains'): frozenset({'contains'}),
    ('started-by', 'finished-by'): frozenset({'contains'}),
    ('contains', 'before'): frozenset({'before', 'meets', 'overlaps', 'contains', 'finished-by'}),
    ('contains', 'meets'): frozenset({'overlaps', 'contains', 'finished-by'}),
    ('contains', 'overlaps'): frozenset({'overlaps', 'contains', 'finished-by'}),
    ('contains', 'starts'): frozenset({'overlaps', 'contains', 'finished-by'}),
    ('contains', 'during'): frozenset({'overlaps', 'starts', 'during', 'finishes', 'equal', 'overlapped-by', 'started-by', 'contains', 'finished-by'}),
    ('contains', 'finishes'): frozenset({'overlapped-by', 'started-by', 'contains'}),
    ('contains', 'equal'): frozenset({'contains'}),
    ('contains', 'after'): frozenset({'after', 'met-by', 'overlapped-by', 'started-by', 'contains'}),
    ('contains', 'met-by'): frozenset({'overlapped-by', 'started-by', 'contains'}),
    ('contains', 'overlapped-by'): frozenset({'overlapped-by', 'started-by', 'contains'}),
    ('contains', 'started-by'): frozenset({'contains'}),
    ('contains', 'contains'): frozenset({'contains'}),
    ('contains', 'finished-by'): frozenset({'contains'}),
    ('finished-by', 'before'): frozenset({'before'}),
    ('finished-by', 'meets'): frozenset({'meets'}),
    ('finished-by', 'overlaps'): frozenset({'overlaps'}),
    ('finished-by', 'starts'): frozenset({'overlaps'}),
    ('finished-by', 'during'): frozenset({'overlaps', 'starts', 'during'}),
    ('finished-by', 'finishes'): frozenset({'finishes', 'equal', 'finished-by'}),
    ('finished-by', 'equal'): frozenset({'finished-by'}),
    ('finished-by', 'after'): frozenset({'after', 'met-by', 'overlapped-by', 'started-by', 'contains'}),
    ('finished-by', 'met-by'): frozenset({'overlapped-by', 'started-by', 'contains'}),
    ('finished-by', 'overlapped-by'): frozenset({'overlapped-by', 'started-by', 'contains'}),
    ('finished-by', 'started-by'): frozenset({'contains'}),
    ('finished-by', 'contains'): frozenset({'contains'}),
    ('finished-by', 'finished-by'): frozenset({'finished-by'}),
}
