package cadence

func (x *handler) run() {
	if x.ready {
		if adh.config.EnableAdminProtection {
			x.apply()
		}
	}
}
