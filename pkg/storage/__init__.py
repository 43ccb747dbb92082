"""
Table files, spectrum CSVs and report workbooks
"""
from .table_handler import TableFile, format_table, write_table, parse_table, read_table
from .csv_handler import spectrum_frame, spectrum_csv, save_spectrum_csv, load_spectrum_csv
from .excel_handler import save_to_excel, save_reports, load_from_excel, summary_row

__all__ = [
    'TableFile',
    'format_table',
    'write_table',
    'parse_table',
    'read_table',
    'spectrum_frame',
    'spectrum_csv',
    'save_spectrum_csv',
    'load_spectrum_csv',
    'save_to_excel',
    'save_reports',
    'load_from_excel',
    'summary_row',
]
