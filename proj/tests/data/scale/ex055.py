k = 0
m = eval(input())
k = k + m
m = eval(input())
k = k + m
m = eval(input())
k = k + m
print(k)
