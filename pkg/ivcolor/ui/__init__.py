# Rich rendering of command records
