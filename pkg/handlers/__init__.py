# Initialize handlers package
