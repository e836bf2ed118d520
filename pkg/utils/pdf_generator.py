#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Utility for rendering command reports as PDF
"""

import io
import json
from datetime import datetime

from reportlab.lib import colors
from reportlab.lib.pagesizes import letter
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

MAX_CELL = 60  # characters shown per table cell

SECTIONS = (("Run configuration", 'config'), ("Result", 'result'), ("Diagnostics", 'diagnostics'))


def _cell(value):
    text = value if isinstance(value, str) else json.dumps(value, sort_keys=True, default=str)
    return text[:MAX_CELL] + "..." if len(text) > MAX_CELL else text


def _table(rows, widths):
    table_style = TableStyle([
        ('BACKGROUND', (0, 0), (-1, 0), colors.grey),
        ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
        ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
        ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
        ('FONTSIZE', (0, 1), (-1, -1), 8),
        ('BOTTOMPADDING', (0, 0), (-1, 0), 12),
        ('BACKGROUND', (0, 1), (-1, -1), colors.beige),
        ('GRID', (0, 0), (-1, -1), 1, colors.black),
    ])
    # Alternating row colors
    for i in range(1, len(rows)):
        if i % 2 == 0:
            table_style.add('BACKGROUND', (0, i), (-1, i), colors.white)
    table = Table(rows, colWidths=widths)
    table.setStyle(table_style)
    return table


def generate_report_pdf(report):
    """
    Render a report as a summary page

    Args:
        report (dict): Report envelope as written to JSON

    Returns:
        BytesIO: PDF file buffer
    """
    buffer = io.BytesIO()
    doc = SimpleDocTemplate(buffer, pagesize=letter)
    styles = getSampleStyleSheet()

    title_style = ParagraphStyle(
        'TitleStyle',
        parent=styles['Heading1'],
        fontSize=18,
        alignment=1,  # Center aligned
        spaceAfter=12
    )
    subtitle_style = ParagraphStyle(
        'SubtitleStyle',
        parent=styles['Heading2'],
        fontSize=14,
        spaceAfter=6
    )
    normal_style = styles['Normal']

    content = []
    content.append(Paragraph(f"Report: {report['command']}", title_style))
    content.append(Spacer(1, 0.25 * inch))
    if not report['config'].get('reproducible'):
        content.append(Paragraph(f"Generated on {datetime.now().strftime('%Y-%m-%d %H:%M')}", normal_style))
    content.append(Paragraph(f"Inputs: {report['inputs_digest']}", normal_style))
    content.append(Paragraph(f"Elapsed: {report['elapsed_ms']:.1f} ms", normal_style))
    content.append(Spacer(1, 0.3 * inch))

    for heading, key in SECTIONS:
        content.append(Paragraph(heading, subtitle_style))
        entries = report[key]
        if entries:
            rows = [[heading, "Value"]] + [[name, _cell(value)] for name, value in sorted(entries.items())]
            content.append(_table(rows, [2 * inch, 4.5 * inch]))
        else:
            content.append(Paragraph("None.", normal_style))
        content.append(Spacer(1, 0.3 * inch))

    doc.build(content)
    buffer.seek(0)
    return buffer


def write_report_pdf(report, path):
    """Render a report and write it to path"""
    with open(path, 'wb') as handle:
        handle.write(generate_report_pdf(report).getvalue())
