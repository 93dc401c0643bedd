from vanderspec.exporter.result_table import ResultTable, export_result_table, companion_path, metadata_lines

__all__ = ['ResultTable', 'export_result_table', 'companion_path', 'metadata_lines']
