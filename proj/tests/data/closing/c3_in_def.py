def go(x, y):
    s = x + y + 1
    t = [s, x, y]
    u = t[0] + t[1] + t[2]
    print(u + s)
    return u
print(go(1, 2))
print(go(-3, 0))
